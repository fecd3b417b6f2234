// equik: command-line front end for the equik core library.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "equik/abelian_group.hpp"
#include "equik/based_ring.hpp"
#include "equik/error.hpp"
#include "equik/ideal_lattice.hpp"
#include "equik/join_topology.hpp"
#include "equik/json_io.hpp"
#include "equik/normal_forms.hpp"
#include "equik/report.hpp"
#include "equik/rokhlin.hpp"

namespace {

using nlohmann::json;
using namespace equik;

constexpr const char* kVersion = "0.1.0";

// Every command produces a machine-readable payload and a text rendering.
struct Output {
  json payload;
  std::string text;
};

std::string matrix_text(const IntMatrix& m, const std::string& indent = "  ") {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(m(i, j).get_str());
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream out;
  if (m.rows() == 0) out << indent << "(empty " << m.rows() << "x" << m.cols() << ")\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    out << "]\n";
  }
  return out.str();
}

std::string join_integers(const IntVector& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i].get_str();
  return out;
}

std::string describe_lower(const DimBound& b) {
  std::string out = "lower " + std::to_string(b.lower);
  if (const auto* w = std::get_if<AnnihilatorWitness>(&b.lower_certificate)) {
    out += " (witness " + render(w->nonzero_group) + ")";
  } else if (const auto* i = std::get_if<IndexWitness>(&b.lower_certificate)) {
    out += " (index " + std::to_string(i->index) + ")";
  }
  return out;
}

std::string describe_upper(const DimBound& b) {
  std::string out = "upper " + render_upper(b.upper);
  if (const auto* j = std::get_if<JoinFactorWitness>(&b.upper_certificate)) {
    out += " (join k=" + std::to_string(j->copies) + ")";
  } else if (const auto* r = std::get_if<RuleApplication>(&b.upper_certificate)) {
    out += " (rule " + std::string(rule_name(r->rule)) + ")";
  } else if (const auto* i = std::get_if<IndexWitness>(&b.upper_certificate)) {
    out += " (index " + std::to_string(i->index) + ")";
  }
  return out;
}

std::string describe(const DimBound& b) { return describe_lower(b) + ", " + describe_upper(b); }

Output bound_output(std::string_view construction, json parameters, const DimBound& b,
                    const std::vector<std::string>& citations) {
  return {bound_report(construction, std::move(parameters), b, citations), describe(b) + "\n"};
}

RingRef load_ring(const std::string& group, const std::string& fusion_file) {
  if (!group.empty() && !fusion_file.empty()) throw InvalidArgument("give either --group or --fusion-file, not both");
  if (!fusion_file.empty()) return from_fusion_file(fusion_file);
  if (group.empty()) throw InvalidArgument("one of --group or --fusion-file is required");
  return ring_from_tag(group);
}

// A bound for tensor-rule: a report file, or one of the shorthands
// z2:<m>, circle:<d>, product-z2:<m>:<G>, circle-product:<d>:<G>, rokhlin, unknown.
DimBound bound_argument(const std::string& text) {
  if (std::filesystem::is_regular_file(text)) {
    const json report = read_json_file(text, "bound report");
    if (!validate_report(report)) throw InvalidArgument("bound report " + text + " does not validate");
    return bound_from_json(report);
  }
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  const auto number = [&](std::size_t i) -> std::size_t {
    if (i >= parts.size()) throw InvalidArgument("bound shorthand '" + text + "' is missing a parameter");
    return json_size(json(parts[i]), "bound shorthand parameter");
  };
  const auto word = [&](std::size_t i) -> const std::string& {
    if (i >= parts.size()) throw InvalidArgument("bound shorthand '" + text + "' is missing a group");
    return parts[i];
  };
  if (parts.empty()) throw InvalidArgument("empty bound argument");
  const std::string& head = parts[0];
  if (head == "rokhlin") return rokhlin_bound();
  if (head == "unknown") return {0, std::nullopt, NoCertificate{}, NoCertificate{}};
  if (head == "z2") return z2_af_bounds(number(1));
  if (head == "circle") return circle_ah_dimension(number(1));
  if (head == "product-z2") return product_z2_bounds(number(1), word(2));
  if (head == "circle-product") return circle_product_dimension(number(1), word(2));
  throw InvalidArgument("'" + text + "' is neither a report file nor a bound shorthand");
}

Output linalg_snf(const std::string& file) {
  const IntMatrix a = matrix_from_json(read_json_file(file, "matrix file"));
  const SnfDecomposition s = snf(a);
  const IntVector inv = s.invariant_factors();
  Output out;
  out.payload = {{"u", matrix_to_json(s.u)},
                 {"d", matrix_to_json(s.d)},
                 {"v", matrix_to_json(s.v)},
                 {"rank", s.rank()},
                 {"invariant_factors", vector_to_json(inv)}};
  out.text = "rank " + std::to_string(s.rank()) + ", invariant factors [" + join_integers(inv, ", ") + "]\nU =\n" +
             matrix_text(s.u) + "D =\n" + matrix_text(s.d) + "V =\n" + matrix_text(s.v);
  return out;
}

Output linalg_hnf(const std::string& file) {
  const IntMatrix a = matrix_from_json(read_json_file(file, "matrix file"));
  const HnfResult h = hnf(a);
  Output out;
  out.payload = {{"h", matrix_to_json(h.h)}, {"transform", matrix_to_json(h.transform)}, {"rank", h.rank()}};
  out.text = "rank " + std::to_string(h.rank()) + "\nH =\n" + matrix_text(h.h) + "T =\n" + matrix_text(h.transform);
  return out;
}

Output group_op(const std::string& op, const std::string& a_text, const std::string& b_text) {
  const FgAbelianGroup a = parse_group(a_text);
  const FgAbelianGroup b = parse_group(b_text);
  const FgAbelianGroup r = op == "tensor" ? tensor(a, b) : tor(a, b);
  return {{{"operation", op}, {"a", render(a)}, {"b", render(b)}, {"result", render(r)}}, render(r) + "\n"};
}

Output rep_ring(const RingRef& ring) {
  Output out;
  out.payload = fusion_ring_to_json(*ring);
  out.payload["name"] = ring->name();
  std::ostringstream text;
  text << "ring " << ring->name() << ", rank " << ring->rank() << "\n";
  std::size_t width = 0;
  for (const auto& label : ring->labels()) width = std::max(width, label.size());
  for (std::size_t i = 0; i < ring->rank(); ++i) {
    text << "  " << std::left << std::setw(static_cast<int>(width)) << ring->labels()[i] << "  dim "
         << ring->dims()[i] << "\n";
  }
  for (std::size_t i = 0; i < ring->rank(); ++i) {
    for (std::size_t j = i; j < ring->rank(); ++j) {
      text << "  " << ring->labels()[i] << " * " << ring->labels()[j] << " =";
      const auto& terms = ring->product(i, j);
      if (terms.empty()) text << " 0";
      for (std::size_t t = 0; t < terms.size(); ++t) {
        text << (t ? " +" : "") << " ";
        if (terms[t].coefficient != 1) text << terms[t].coefficient << " ";
        text << ring->labels()[terms[t].index];
      }
      text << "\n";
    }
  }
  out.text = text.str();
  return out;
}

Output rep_ideal_powers(const RingRef& ring, std::size_t max_power) {
  Output out;
  out.payload = {{"ring", ring->name()}, {"powers", json::array()}};
  std::ostringstream text;
  IdealLattice current = ideal_power(ring, 1);
  const IdealLattice aug = augmentation_ideal(ring);
  for (std::size_t m = 1; m <= max_power; ++m) {
    const IdealLattice next = ideal_product(current, aug);
    const FgAbelianGroup quotient = lattice_quotient(current, next);
    out.payload["powers"].push_back(
        {{"m", m}, {"basis", matrix_to_json(current.basis())}, {"quotient_to_next", render(quotient)}});
    text << "I^" << m << " basis:\n" << matrix_text(current.basis()) << "I^" << m << "/I^" << m + 1 << " = "
         << render(quotient) << "\n";
    current = next;
  }
  out.text = text.str();
  return out;
}

Output rep_lambda(std::size_t p) {
  const IntVector n = lambda_expansion(p);
  std::ostringstream text;
  text << "lambda^" << p << " =";
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (sgn(n[j]) == 0) continue;
    text << (sgn(n[j]) < 0 ? " - " : " + ") << abs(n[j]) << " lambda^" << j + 1;
  }
  text << "\n";
  return {{{"p", p}, {"coefficients", vector_to_json(n)}}, text.str()};
}

Output rep_regular(const RingRef& ring) {
  const RegularClassCheck r = regular_class_check(ring);
  return {{{"ring", ring->name()}, {"regular", vector_to_json(r.regular.coefficients)}, {"annihilated", r.annihilated}},
          "regular class [" + join_integers(r.regular.coefficients, ", ") + "]: " +
              (r.annihilated ? "annihilated by the augmentation ideal" : "NOT annihilated") + "\n"};
}

Output join_ktheory(std::size_t n, std::size_t k, bool verify) {
  const KTheoryRanks ranks = join_k_theory_formula(n, k);
  Output out;
  out.payload = {{"set_size", n}, {"copies", k}, {"k0_rank", ranks.k0_rank}, {"k1_rank", ranks.k1_rank}};
  out.text = "K0 rank " + std::to_string(ranks.k0_rank) + ", K1 rank " + std::to_string(ranks.k1_rank);
  if (verify) {
    const OracleReport oracle = oracle_consistency(n, k);
    out.payload["oracle"] = {{"consistent", oracle.consistent},
                             {"torsion_free", oracle.torsion_free},
                             {"k0_rank", oracle.from_homology.k0_rank},
                             {"k1_rank", oracle.from_homology.k1_rank}};
    out.text += std::string("; oracle: ") + (oracle.consistent ? "consistent" : "INCONSISTENT");
  }
  out.text += "\n";
  return out;
}

Output join_homology(std::size_t n, std::size_t k) {
  const BettiTable table = reduced_homology(boundary_matrices(build_join_complex(n, k)));
  json groups = json::array();
  for (const auto& g : table.reduced) groups.push_back(render(g));
  return {{{"set_size", n}, {"copies", k}, {"reduced_homology", groups}}, render_homology(table)};
}

Output join_mv_delta(std::size_t l, std::size_t n) {
  const MayerVietorisDelta d = mayer_vietoris_delta(l, n);
  return {{{"l", l},
           {"set_size", n},
           {"delta0", matrix_to_json(d.delta0)},
           {"kernel_rank", d.kernel_rank},
           {"cokernel", render(d.cokernel)}},
          "kernel rank " + std::to_string(d.kernel_rank) + ", cokernel " + render(d.cokernel) + "\n"};
}

Output z6_output(std::size_t d) {
  const Z6CollapseReport r = z6_collapse_report(d);
  std::ostringstream text;
  text << "factor Z_2 x Z_3: " << describe(r.factor1) << "\n"
       << "factor Z_3 x Z_2: " << describe(r.factor2) << "\n"
       << "product Z_6:      " << describe(r.product) << "\n"
       << "finding: " << (r.factors_exceed_d && r.product_is_rokhlin ? "non-monotone" : "monotone")
       << " (factor lowers > " << d << ", product upper " << render_upper(r.product.upper) << ")\n";
  return {z6_report_to_json(r), text.str()};
}

Output commutative_output(const std::string& group, std::size_t k) {
  const CommutativeDimension c = commutative_dimension(group, k);
  std::string text = "dim " + std::to_string(c.dim) + ", ind " + std::to_string(c.ind);
  if (c.sphere_check) text += std::string("; sphere S^") + std::to_string(k - 1) + ": " + (*c.sphere_check ? "yes" : "NO");
  return {commutative_report(group, k, c), text + "\n"};
}

Output finite_output(const std::string& group, std::size_t n) {
  const FiniteAfOutcome outcome = finite_af_bounds(group, n);
  std::string text;
  if (const auto* b = std::get_if<DimBound>(&outcome)) {
    text = describe(*b) + "\n";
  } else {
    text = "existence-only: " + std::get<ExistenceOnly>(outcome).note + "\n";
  }
  return {finite_report(group, n, outcome), text};
}

Output validate_output(const std::string& file) {
  const json report = read_json_file(file, "report");
  if (!validate_report(report)) throw InvalidArgument("report " + file + " does not validate");
  return {{{"file", file}, {"valid", true}}, "valid\n"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equik: exact equivariant K-theory bounds for Rokhlin dimension"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  bool as_json = false;
  bool meta = false;
  app.add_flag("--json", as_json, "Emit the machine-readable form");
  app.add_flag("--meta", meta, "Print run metadata to stderr");

  std::function<Output()> run;
  std::string command;
  const auto bind = [&](CLI::App* sub, std::string name, std::function<Output()> fn) {
    sub->callback([&run, &command, name = std::move(name), fn = std::move(fn)] {
      command = name;
      run = fn;
    });
  };

  // linalg
  auto* linalg = app.add_subcommand("linalg", "Exact integer normal forms")->require_subcommand(1);
  std::string matrix_file;
  for (const char* name : {"snf", "hnf"}) {
    auto* sub = linalg->add_subcommand(name, std::string(name) == "snf" ? "Smith normal form" : "Hermite normal form");
    sub->add_option("--matrix", matrix_file, "Matrix file {rows, cols, entries}")->required();
    bind(sub, std::string("linalg ") + name,
         std::string(name) == "snf" ? std::function<Output()>([&] { return linalg_snf(matrix_file); })
                                    : std::function<Output()>([&] { return linalg_hnf(matrix_file); }));
  }

  // group
  auto* group = app.add_subcommand("group", "Finitely generated abelian groups")->require_subcommand(1);
  std::string group_a, group_b;
  for (const char* name : {"tensor", "tor"}) {
    auto* sub = group->add_subcommand(name, std::string(name) == "tensor" ? "A (x) B" : "Tor(A, B)");
    sub->add_option("--a", group_a, "First group, e.g. \"Z^2 + Z_4\"")->required();
    sub->add_option("--b", group_b, "Second group")->required();
    bind(sub, std::string("group ") + name, [&, op = std::string(name)] { return group_op(op, group_a, group_b); });
  }

  // rep
  auto* rep = app.add_subcommand("rep", "Representation rings and their ideals")->require_subcommand(1);
  std::string ring_tag, fusion_file;
  std::size_t max_power = 3;
  std::size_t lambda_p = 3;
  const auto ring_options = [&](CLI::App* sub) {
    sub->add_option("--group", ring_tag, "Ring tag: z<n>, s3, circle:<n>, products joined by x");
    sub->add_option("--fusion-file", fusion_file, "Fusion table file");
  };
  auto* rep_ring_cmd = rep->add_subcommand("ring", "Print and validate a ring");
  ring_options(rep_ring_cmd);
  bind(rep_ring_cmd, "rep ring", [&] { return rep_ring(load_ring(ring_tag, fusion_file)); });
  auto* rep_powers_cmd = rep->add_subcommand("ideal-powers", "Hermite bases of I^m and quotients I^m/I^(m+1)");
  ring_options(rep_powers_cmd);
  rep_powers_cmd->add_option("--max", max_power, "Largest power")->check(CLI::Range(1, 64));
  bind(rep_powers_cmd, "rep ideal-powers",
       [&] { return rep_ideal_powers(load_ring(ring_tag, fusion_file), max_power); });
  auto* rep_lambda_cmd = rep->add_subcommand("lambda", "Expansion of lambda^p in R(Z_p)");
  rep_lambda_cmd->add_option("--p", lambda_p, "Odd p >= 3")->required();
  bind(rep_lambda_cmd, "rep lambda", [&] { return rep_lambda(lambda_p); });
  auto* rep_regular_cmd = rep->add_subcommand("regular", "Regular class and its annihilation");
  ring_options(rep_regular_cmd);
  bind(rep_regular_cmd, "rep regular", [&] { return rep_regular(load_ring(ring_tag, fusion_file)); });

  // join
  auto* join = app.add_subcommand("join", "Joins of finite discrete sets")->require_subcommand(1);
  std::size_t set_size = 2, copies = 1, l_rank = 1;
  bool verify_oracle = false;
  auto* join_k = join->add_subcommand("ktheory", "K-theory ranks of the k-fold join");
  join_k->add_option("--set-size", set_size, "N")->required();
  join_k->add_option("--copies", copies, "k")->required();
  join_k->add_flag("--verify-oracle", verify_oracle, "Cross-check against simplicial homology");
  bind(join_k, "join ktheory", [&] { return join_ktheory(set_size, copies, verify_oracle); });
  auto* join_h = join->add_subcommand("homology", "Reduced homology of the join complex");
  join_h->add_option("--set-size", set_size, "N")->required();
  join_h->add_option("--copies", copies, "k")->required();
  bind(join_h, "join homology", [&] { return join_homology(set_size, copies); });
  auto* join_mv = join->add_subcommand("mv-delta", "Mayer-Vietoris map delta_0");
  join_mv->add_option("--l", l_rank, "Rank of K^0 before the step")->required();
  join_mv->add_option("--set-size", set_size, "N")->required();
  bind(join_mv, "join mv-delta", [&] { return join_mv_delta(l_rank, set_size); });

  // rokhlin
  auto* rok = app.add_subcommand("rokhlin", "Certified Rokhlin dimension bounds")->require_subcommand(1);
  std::size_t m = 1, d = 0, n = 1;
  std::string g = "z3", rule = "sum", b1, b2;
  auto* rz2 = rok->add_subcommand("z2", "Z_2 on an AF algebra");
  rz2->add_option("--m", m, "m >= 1")->required();
  bind(rz2, "rokhlin z2", [&] {
    return bound_output("z2-af", {{"m", m}}, z2_af_bounds(m),
                        {"annihilation-lower-bound", "z2-join-k-theory", "join-upper-bound"});
  });
  auto* rcircle = rok->add_subcommand("circle", "S^1 on an AH algebra");
  rcircle->add_option("--d", d, "d >= 0")->required();
  bind(rcircle, "rokhlin circle", [&] {
    return bound_output("circle-ah", {{"d", d}}, circle_ah_dimension(d),
                        {"annihilation-lower-bound", "circle-join-spheres", "join-upper-bound"});
  });
  auto* rprod = rok->add_subcommand("product-z2", "Z_2 x G, G of odd order");
  rprod->add_option("--m", m, "m >= 1")->required();
  rprod->add_option("--group", g, "Ring tag of G")->required();
  bind(rprod, "rokhlin product-z2", [&] {
    return bound_output("product-z2", {{"m", m}, {"group", g}}, product_z2_bounds(m, g),
                        {"annihilation-lower-bound", "kunneth-tensor-piece", "rokhlin-absorption"});
  });
  auto* rcprod = rok->add_subcommand("circle-product", "S^1 x G");
  rcprod->add_option("--d", d, "d >= 0")->required();
  rcprod->add_option("--group", g, "Ring tag of G")->required();
  bind(rcprod, "rokhlin circle-product", [&] {
    return bound_output("circle-product", {{"d", d}, {"group", g}}, circle_product_dimension(d, g),
                        {"annihilation-lower-bound", "kunneth-tensor-piece", "rokhlin-absorption"});
  });
  auto* rz6 = rok->add_subcommand("z6-collapse", "Non-monotone Z_6 example");
  rz6->add_option("--d", d, "d >= 1")->required();
  bind(rz6, "rokhlin z6-collapse", [&] { return z6_output(d); });
  auto* rcomm = rok->add_subcommand("commutative", "Free actions on G^{*k}");
  rcomm->add_option("--group", g, "z2, s1 or z<n>")->required();
  rcomm->add_option("--copies", copies, "k >= 1")->required();
  bind(rcomm, "rokhlin commutative", [&] { return commutative_output(g, copies); });
  auto* rfinite = rok->add_subcommand("finite", "Finite group on an AF algebra");
  rfinite->add_option("--group", g, "Ring tag of G")->required();
  rfinite->add_option("--n", n, "n >= 1")->required();
  bind(rfinite, "rokhlin finite", [&] { return finite_output(g, n); });
  auto* rtensor = rok->add_subcommand("tensor-rule", "Combine two bounds");
  rtensor->add_option("--rule", rule, "sum, min or absorb")->required();
  rtensor->add_option("--b1", b1, "Report file or shorthand (z2:m, circle:d, rokhlin, unknown, ...)")->required();
  rtensor->add_option("--b2", b2, "Report file or shorthand")->required();
  bind(rtensor, "rokhlin tensor-rule", [&] {
    const TensorRule r = parse_rule(rule);
    const char* citation = r == TensorRule::sum ? "tensor-sum-rule"
                           : r == TensorRule::min ? "tensor-min-rule"
                                                  : "rokhlin-absorption";
    return bound_output("tensor-rule", {{"rule", rule}, {"b1", b1}, {"b2", b2}},
                        tensor_rule(r, bound_argument(b1), bound_argument(b2)), {citation});
  });

  // validate
  auto* val = app.add_subcommand("validate", "Recompute every certificate in a report");
  std::string report_file;
  val->add_option("report", report_file, "Report file")->required();
  bind(val, "validate", [&] { return validate_output(report_file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    const Output out = run();
    if (as_json) {
      std::cout << out.payload.dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    status = 3;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    status = 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = 1;
  }
  if (meta) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    std::cerr << json{{"tool", "equik"}, {"version", kVersion}, {"command", command}, {"exit", status},
                      {"elapsed_ms", elapsed.count()}}
                     .dump()
              << "\n";
  }
  return status;
}
