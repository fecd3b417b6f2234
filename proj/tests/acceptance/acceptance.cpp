// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Time limits are wall-clock seconds for the whole criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "equik/based_ring.hpp"
#include "equik/error.hpp"
#include "equik/ideal_lattice.hpp"
#include "equik/join_topology.hpp"
#include "equik/normal_forms.hpp"
#include "equik/report.hpp"
#include "equik/ring_module.hpp"
#include "equik/rokhlin.hpp"
#include "support.hpp"

namespace {

using namespace equik;

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<std::string()> check;  // empty string on success, else the first failure
};

template <typename... Parts>
std::string fail(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

std::string snf_soundness() {
  testing::Rng rng(0x5eed0001);
  std::size_t with_minors = 0;
  for (int t = 0; t < 200; ++t) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
    const IntMatrix a = testing::random_matrix(rng, rows, cols, -9, 9);
    const SnfDecomposition s = snf(a);
    if (!(s.u * a * s.v == s.d) || !s.d.is_diagonal()) return fail("U A V != D for matrix ", t);
    if (abs(testing::bareiss_determinant(s.u)) != 1 || abs(testing::bareiss_determinant(s.v)) != 1) {
      return fail("transform not unimodular for matrix ", t);
    }
    const IntVector f = s.invariant_factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] <= 0 || (i + 1 < f.size() && f[i + 1] % f[i] != 0)) return fail("divisibility fails for matrix ", t);
    }
    if (rows <= 4 && cols <= 4) {
      ++with_minors;
      Integer prefix = 1;
      for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        const Integer expected = k <= f.size() ? (prefix *= f[k - 1]) : Integer(0);
        if (testing::minor_gcd(a, k) != expected) return fail("minor gcd disagrees for matrix ", t, " k=", k);
      }
    }
  }
  if (with_minors == 0) return "no matrix small enough for the minor check";
  return "";
}

std::string join_vs_oracle() {
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) cases.emplace_back(n, k);
  }
  for (std::size_t k = 5; k <= 6; ++k) cases.emplace_back(2, k);
  for (const auto& [n, k] : cases) {
    const OracleReport r = oracle_consistency(n, k);
    if (!r.consistent) return fail("formula and homology disagree at N=", n, " k=", k);
    if (!r.torsion_free) return fail("torsion in homology at N=", n, " k=", k);
    Integer p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= static_cast<unsigned long>(n - 1);
    const KTheoryRanks expected =
        k % 2 == 1 ? KTheoryRanks{p.get_ui() + 1, 0} : KTheoryRanks{1, static_cast<std::size_t>(p.get_ui())};
    if (!(r.formula == expected)) return fail("closed form differs from (N-1)^k pattern at N=", n, " k=", k);
  }
  return "";
}

std::string sphere_identification() {
  for (std::size_t k = 1; k <= 6; ++k) {
    if (!is_sphere_homology(reduced_homology(boundary_matrices(build_join_complex(2, k))), k - 1)) {
      return fail("Z_2 join with k=", k, " is not a homology S^", k - 1);
    }
  }
  return "";
}

std::string mayer_vietoris() {
  for (std::size_t l = 1; l <= 5; ++l) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const MayerVietorisDelta d = mayer_vietoris_delta(l, n);
      if (d.kernel_rank != 1) return fail("kernel rank ", d.kernel_rank, " at l=", l, " N=", n);
      if (!(d.cokernel == FgAbelianGroup::free(l * n - l - n + 1))) {
        return fail("cokernel ", render(d.cokernel), " at l=", l, " N=", n);
      }
    }
  }
  return "";
}

std::string filtration() {
  for (std::size_t p : {3u, 5u, 7u}) {
    const RingRef ring = cyclic_ring(p);
    for (std::size_t m = 1; m <= 4; ++m) {
      const FgAbelianGroup q = lattice_quotient(ideal_power(ring, m), ideal_power(ring, m + 1));
      if (!(q == FgAbelianGroup::cyclic(static_cast<unsigned long>(p)))) {
        return fail("I^", m, "/I^", m + 1, " for Z_", p, " is ", render(q));
      }
    }
  }
  const RingRef z2 = cyclic_ring(2);
  for (std::size_t m = 1; m <= 8; ++m) {
    const IdealLattice i = ideal_power(z2, m);
    const Integer expected = Integer(1) << static_cast<mp_bitcnt_t>(m - 1);
    if (i.rank() != 1 || content(i.basis().row_vector(0)) != expected) return fail("I(Z_2)^", m, " content");
  }
  return "";
}

std::string lambda_check() {
  for (std::size_t p : {3u, 5u, 7u}) {
    const IntVector n = lambda_expansion(p);
    if (n[0] != -Integer(static_cast<unsigned long>(p))) return fail("n_1 = ", n[0], " for p=", p);
    const RingRef ring = cyclic_ring(p);
    const RingElement lambda = subtract(ring->unit(), ring->basis(1));
    RingElement rhs = ring->zero();
    for (std::size_t j = 1; j < p; ++j) {
      RingElement term = power(*ring, lambda, j);
      for (auto& c : term.coefficients) c *= n[j - 1];
      rhs = add(rhs, term);
    }
    if (!(power(*ring, lambda, p) == rhs)) return fail("back-substitution fails for p=", p);
  }
  return "";
}

std::string regular_class() {
  std::vector<RingRef> rings;
  for (std::size_t n = 2; n <= 7; ++n) rings.push_back(cyclic_ring(n));
  rings.push_back(product_ring(cyclic_ring(2), cyclic_ring(3)));
  rings.push_back(from_fusion_file(std::string(EQUIK_DATA_DIR) + "/s3.json"));
  for (const auto& r : rings) {
    if (!regular_class_check(r).annihilated) return fail("regular class not annihilated in ", r->name());
  }
  return "";
}

std::string z2_bounds() {
  for (std::size_t m = 1; m <= 5; ++m) {
    const DimBound b = z2_af_bounds(m);
    if (b.lower != m || b.upper != UpperBound{2 * m + 2}) return fail("bounds for m=", m);
    const auto* w = std::get_if<AnnihilatorWitness>(&b.lower_certificate);
    if (!w || !(w->nonzero_group == FgAbelianGroup::cyclic(2))) return fail("witness for m=", m);
    if (!validate(b)) return fail("certificate for m=", m, " does not validate");
  }
  return "";
}

std::string circle_exactness() {
  for (std::size_t d = 0; d <= 8; ++d) {
    if (max_nonvanishing_power(circle_module(d + 1), d + 4) != static_cast<long>(d)) {
      return fail("max nonvanishing power of Circle(", d + 1, ")");
    }
    const DimBound b = circle_ah_dimension(d);
    if (b.lower != d || b.upper != UpperBound{d}) return fail("circle bounds for d=", d);
    const auto* w = std::get_if<AnnihilatorWitness>(&b.lower_certificate);
    if (!w || !w->stability || w->stability->multiplier != 2 || w->stability->element[0] != 1) {
      return fail("stability witness for d=", d);
    }
    IntVector one(d + 1);
    one[0] = 1;
    if (!element_stable_nonvanishing(circle_module(d + 1), one, d, 2)) return fail("2-stability fails for d=", d);
    if (!validate(b)) return fail("certificate for d=", d, " does not validate");
  }
  return "";
}

std::string kunneth_certificate() {
  for (const char* g : {"z3", "z5"}) {
    const Integer order = ring_from_tag(g)->rank();
    for (std::size_t m = 1; m <= 4; ++m) {
      const KModelDescriptor model{"trunc-z2:" + std::to_string(m + 1) + " * trunc:" + g + ":1"};
      const RingModule module = model.instantiate();
      const IdealLattice ideal_m = ideal_power(model.ideal("factor:0"), m);
      const FgAbelianGroup image = ideal_image(ideal_m, module);
      if (!(image == FgAbelianGroup::cyclic(2))) return fail("image is ", render(image), " for ", g, " m=", m);
      IntVector x(module.generators());
      x[0] = 1;
      if (!element_stable_nonvanishing(ideal_m, module, x, order)) return fail("not stable under |G| for ", g);
      if (!validate(product_z2_bounds(m, g))) return fail("product certificate for ", g, " m=", m);
    }
  }
  return "";
}

std::string annihilation_ceiling() {
  std::vector<RingRef> rings;
  for (std::size_t n = 2; n <= 7; ++n) rings.push_back(cyclic_ring(n));
  rings.push_back(product_ring(cyclic_ring(2), cyclic_ring(3)));
  rings.push_back(symmetric_group_s3_ring());
  for (std::size_t d = 1; d <= 6; ++d) {
    for (const auto& r : rings) {
      if (!ideal_image(ideal_power(r, d), truncated_ring_module(r, d)).is_trivial()) {
        return fail("I^", d, " does not kill R/I^", d, " for ", r->name());
      }
    }
    const RingModule c = circle_module(d);
    if (!ideal_image(ideal_power(c.ring(), d), c).is_trivial()) return fail("I^", d, " does not kill Circle(", d, ")");
  }
  return "";
}

std::string calculus_and_validation() {
  std::vector<DimBound> bounds{rokhlin_bound(), DimBound{0, std::nullopt, NoCertificate{}, NoCertificate{}}};
  for (std::size_t m = 1; m <= 3; ++m) bounds.push_back(z2_af_bounds(m));
  for (std::size_t d = 0; d <= 3; ++d) bounds.push_back(circle_ah_dimension(d));
  for (const auto& b : bounds) {
    if (tensor_rule(TensorRule::min, b, b).upper != b.upper) return "min(b, b) != b";
    if (tensor_rule(TensorRule::sum, b, rokhlin_bound()).upper != b.upper) return "sum(b, {0,0}) != b";
    if (!validate(tensor_rule(TensorRule::sum, b, rokhlin_bound()))) return "rule output does not validate";
  }
  std::vector<nlohmann::json> emitted;
  for (std::size_t d = 1; d <= 3; ++d) {
    const Z6CollapseReport r = z6_collapse_report(d);
    if (r.factor1.lower <= d || r.factor2.lower <= d) return fail("factor lower not above d=", d);
    if (r.product.lower != 0 || r.product.upper != UpperBound{0}) return fail("product is not {0,0} for d=", d);
    emitted.push_back(z6_report_to_json(r));
  }
  emitted.push_back(bound_report("z2-af", {{"m", 2}}, z2_af_bounds(2), {"annihilation-lower-bound"}));
  emitted.push_back(bound_report("circle-ah", {{"d", 3}}, circle_ah_dimension(3), {"join-upper-bound"}));
  emitted.push_back(bound_report("product-z2", {{"m", 2}}, product_z2_bounds(2, "z3"), {"kunneth-tensor-piece"}));
  emitted.push_back(
      bound_report("circle-product", {{"d", 2}}, circle_product_dimension(2, "z5"), {"kunneth-tensor-piece"}));
  emitted.push_back(commutative_report("z2", 4, commutative_dimension("z2", 4)));
  emitted.push_back(finite_report("s3", 1, finite_af_bounds("s3", 1)));
  emitted.push_back(finite_report("z2", 2, finite_af_bounds("z2", 2)));
  for (const auto& r : emitted) {
    if (!validate_report(nlohmann::json::parse(r.dump()))) return fail("emitted report fails: ", r.at("construction"));
  }
  // Lower bound 5 on R(Z_2)/I^3.
  DimBound forged = z2_af_bounds(2);
  forged.lower = 5;
  std::get<AnnihilatorWitness>(forged.lower_certificate).power = 5;
  forged.upper = 6;
  if (validate(forged)) return "forged bound validated";
  nlohmann::json forged_json = emitted[3];
  forged_json["lower"] = 5;
  if (validate_report(forged_json)) return "forged report validated";
  return "";
}

std::string commutative_case() {
  for (const char* g : {"z2", "z3", "s1"}) {
    for (std::size_t k = 1; k <= 6; ++k) {
      const CommutativeDimension c = commutative_dimension(g, k);
      if (c.dim != k - 1 || c.ind != k || c.dim + 1 != c.ind) return fail("dim/ind for ", g, " k=", k);
      if (!validate(c.bound)) return fail("index certificate for ", g, " k=", k);
      if (std::string(g) == "z2" && !(c.sphere_check && *c.sphere_check)) return fail("sphere check for k=", k);
    }
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "SNF soundness", 5, snf_soundness},
      {2, "join K-theory vs homology oracle", 60, join_vs_oracle},
      {3, "sphere identification", 0, sphere_identification},
      {4, "Mayer-Vietoris delta_0", 0, mayer_vietoris},
      {5, "I-adic filtration", 10, filtration},
      {6, "lambda^p expansion", 0, lambda_check},
      {7, "regular class annihilation", 0, regular_class},
      {8, "Z_2 bounds", 0, z2_bounds},
      {9, "circle exactness", 0, circle_exactness},
      {10, "Kunneth product certificate", 0, kunneth_certificate},
      {11, "annihilation ceiling", 0, annihilation_ceiling},
      {12, "calculus laws and validation", 0, calculus_and_validation},
      {13, "commutative case", 0, commutative_case},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      problem = fail("took ", seconds, " s, limit ", c.limit_seconds, " s");
    }
    std::printf("[%s] %2d %-32s %8.3f s%s%s\n", problem.empty() ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                problem.empty() ? "" : "  ", problem.c_str());
    if (!problem.empty()) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
