#include "equik/report.hpp"

#include <algorithm>

#include "equik/error.hpp"
#include "equik/json_io.hpp"

namespace equik {

using nlohmann::json;

namespace {

json upper_to_json(const UpperBound& upper) { return upper ? json(*upper) : json("inf"); }

UpperBound upper_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return std::nullopt;
  return json_size(j, "upper");
}

json certificate_to_json(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, NoCertificate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, AnnihilatorWitness>) {
          json out{{"kind", "annihilator"}, {"ring", c.ring},   {"model", c.model},
                   {"ideal", c.ideal},      {"power", c.power}, {"nonzero_group", render(c.nonzero_group)}};
          if (c.stability) {
            out["stability"] = {{"multiplier", integer_to_json(c.stability->multiplier)},
                                {"element", vector_to_json(c.stability->element)}};
          }
          return out;
        } else if constexpr (std::is_same_v<T, JoinFactorWitness>) {
          return {{"kind", "join-factor"}, {"copies", c.copies}};
        } else if constexpr (std::is_same_v<T, IndexWitness>) {
          return {{"kind", "index"}, {"group", c.group}, {"index", c.index}};
        } else {
          json inputs = json::array();
          for (const auto& b : c.inputs) inputs.push_back(bound_to_json(b));
          return {{"kind", "rule"}, {"rule", rule_name(c.rule)}, {"inputs", inputs}};
        }
      },
      cert);
}

Certificate certificate_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "annihilator") {
    AnnihilatorWitness w;
    w.ring = j.at("ring").get<std::string>();
    w.model = j.at("model").get<std::string>();
    w.ideal = j.at("ideal").get<std::string>();
    w.power = json_size(j.at("power"), "power");
    w.nonzero_group = parse_group(j.at("nonzero_group").get<std::string>());
    if (j.contains("stability")) {
      const json& s = j.at("stability");
      w.stability = AnnihilatorWitness::Stability{json_integer(s.at("multiplier"), "multiplier"),
                                                  vector_from_json(s.at("element"), "stability element")};
    }
    return w;
  }
  if (kind == "join-factor") return JoinFactorWitness{json_size(j.at("copies"), "copies")};
  if (kind == "index") return IndexWitness{j.at("group").get<std::string>(), json_size(j.at("index"), "index")};
  if (kind == "rule") {
    RuleApplication r;
    r.rule = parse_rule(j.at("rule").get<std::string>());
    for (const auto& b : j.at("inputs")) r.inputs.push_back(bound_from_json(b));
    return r;
  }
  throw InvalidArgument("unknown certificate kind '" + kind + "'");
}

json citations_json(const std::vector<std::string>& ids) {
  json out = json::array();
  for (const auto& id : ids) {
    const auto& catalog = citation_catalog();
    const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& e) { return e.first == id; });
    if (it == catalog.end()) throw Error("unknown citation id '" + id + "'");
    out.push_back({{"id", it->first}, {"statement", it->second}});
  }
  return out;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& citation_catalog() {
  static const std::vector<std::pair<std::string, std::string>> catalog{
      {"annihilation-lower-bound", "a nonzero image of I(G)^n on the equivariant K-theory forces dim >= n"},
      {"join-upper-bound", "the X-Rokhlin property for X the (d+1)-fold join of G gives dim <= d"},
      {"z2-join-k-theory", "the equivariant K-theory of the Z_2 joins is a truncation R(Z_2)/I^l"},
      {"circle-join-spheres", "the n-fold join of S^1 is S^{2n-1}; multiplication by 2 keeps I^n [1] nonzero"},
      {"kunneth-tensor-piece", "the tensor piece of the Kunneth sequence is an R(G) (x) R(H) submodule"},
      {"tensor-sum-rule", "dim of a product action is at most the sum of the factor dimensions"},
      {"tensor-min-rule", "dim of a diagonal action is at most the smaller factor dimension"},
      {"rokhlin-absorption", "tensoring with a Rokhlin action does not raise the dimension"},
      {"cyclic-filtration-quotient", "I(Z_p)^m / I(Z_p)^{m+1} is cyclic of order p for odd p"},
      {"index-formula", "for commutative targets dim equals the G-index of Y minus one"},
      {"existence-only", "a suitable join length exists for every n, but no effective bound is known"},
  };
  return catalog;
}

json bound_to_json(const DimBound& bound) {
  json certs = json::array();
  for (const auto& [role, cert] : {std::pair{"lower", &bound.lower_certificate},
                                   std::pair{"upper", &bound.upper_certificate}}) {
    json c = certificate_to_json(*cert);
    if (c.is_null()) continue;
    c["role"] = role;
    certs.push_back(std::move(c));
  }
  return {{"lower", bound.lower}, {"upper", upper_to_json(bound.upper)}, {"certificates", certs}};
}

DimBound bound_from_json(const json& j) {
  DimBound b;
  b.lower = json_size(j.at("lower"), "lower");
  b.upper = upper_from_json(j.at("upper"));
  for (const auto& c : j.at("certificates")) {
    const std::string role = c.at("role").get<std::string>();
    if (role == "lower") {
      b.lower_certificate = certificate_from_json(c);
    } else if (role == "upper") {
      b.upper_certificate = certificate_from_json(c);
    } else {
      throw InvalidArgument("unknown certificate role '" + role + "'");
    }
  }
  return b;
}

json bound_report(std::string_view construction, json parameters, const DimBound& bound,
                  const std::vector<std::string>& citations) {
  json out = bound_to_json(bound);
  out["construction"] = construction;
  out["parameters"] = std::move(parameters);
  out["citations"] = citations_json(citations);
  return out;
}

json z6_report_to_json(const Z6CollapseReport& r) {
  json factors = json::array();
  factors.push_back(bound_report("product-z2", {{"m", r.d + 1}, {"group", "z3"}}, r.factor1,
                                    {"annihilation-lower-bound", "kunneth-tensor-piece", "rokhlin-absorption"}));
  factors.push_back(bound_report("cyclic-product", {{"p", 3}, {"m", r.d + 1}, {"group", "z2"}}, r.factor2,
                                    {"annihilation-lower-bound", "kunneth-tensor-piece", "cyclic-filtration-quotient"}));
  return {
      {"construction", "z6-collapse"},
      {"parameters", {{"d", r.d}}},
      {"factors", factors},
      {"product", bound_report("tensor-rule", {{"rule", "min"}}, r.product, {"tensor-min-rule", "tensor-sum-rule"})},
      {"finding",
       {{"factors_exceed_d", r.factors_exceed_d},
        {"product_is_rokhlin", r.product_is_rokhlin},
        {"non_monotone", r.factors_exceed_d && r.product_is_rokhlin}}},
      {"citations", citations_json({"tensor-min-rule"})},
  };
}

Z6CollapseReport z6_report_from_json(const json& j) {
  Z6CollapseReport r;
  r.d = json_size(j.at("parameters").at("d"), "d");
  const json& factors = j.at("factors");
  if (!factors.is_array() || factors.size() != 2) throw InvalidArgument("z6 report needs two factors");
  r.factor1 = bound_from_json(factors[0]);
  r.factor2 = bound_from_json(factors[1]);
  r.product = bound_from_json(j.at("product"));
  r.factors_exceed_d = j.at("finding").at("factors_exceed_d").get<bool>();
  r.product_is_rokhlin = j.at("finding").at("product_is_rokhlin").get<bool>();
  return r;
}

json commutative_report(std::string_view group_tag, std::size_t copies, const CommutativeDimension& result) {
  json out = bound_report("commutative-join", {{"group", group_tag}, {"copies", copies}}, result.bound,
                          {"index-formula"});
  out["dim"] = result.dim;
  out["ind"] = result.ind;
  if (result.sphere_check) out["sphere_check"] = *result.sphere_check;
  return out;
}

json finite_report(std::string_view group_tag, std::size_t n, const FiniteAfOutcome& outcome) {
  const json parameters{{"group", group_tag}, {"n", n}};
  if (const auto* b = std::get_if<DimBound>(&outcome)) {
    json out = bound_report("finite-group-af", parameters, *b,
                            {"annihilation-lower-bound", "join-upper-bound", "z2-join-k-theory"});
    out["outcome"] = "bounded";
    return out;
  }
  const auto& e = std::get<ExistenceOnly>(outcome);
  return {{"construction", "finite-group-af"},
          {"parameters", parameters},
          {"outcome", "existence-only"},
          {"note", e.note},
          {"citations", citations_json({"existence-only"})}};
}

bool validate_report(const json& report) {
  try {
    const std::string construction = report.at("construction").get<std::string>();
    if (construction == "z6-collapse") return validate(z6_report_from_json(report));
    if (construction == "finite-group-af" && report.at("outcome").get<std::string>() == "existence-only") {
      return report.at("note").is_string() && !report.at("note").get<std::string>().empty();
    }
    const DimBound bound = bound_from_json(report);
    if (!validate(bound)) return false;
    if (construction == "commutative-join") {
      const auto& p = report.at("parameters");
      const CommutativeDimension fresh =
          commutative_dimension(p.at("group").get<std::string>(), json_size(p.at("copies"), "copies"));
      if (json_size(report.at("dim"), "dim") != fresh.dim || json_size(report.at("ind"), "ind") != fresh.ind) {
        return false;
      }
      if (fresh.dim + 1 != fresh.ind || bound.lower != fresh.dim) return false;
      if (report.contains("sphere_check") && (!fresh.sphere_check || !*fresh.sphere_check)) return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  } catch (const json::exception&) {
    return false;
  }
}

}  // namespace equik
