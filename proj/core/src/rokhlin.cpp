#include "equik/rokhlin.hpp"

#include <algorithm>

#include "equik/error.hpp"
#include "equik/join_topology.hpp"
#include "equik/ring_module.hpp"

namespace equik {

namespace {

// Join complexes beyond this many copies are not built for the sphere check.
constexpr std::size_t kSphereCheckMaxCopies = 6;

Integer group_order(const BasedRing& ring) {
  Integer order = 0;
  for (const auto& d : ring.dims()) order += d * d;
  return order;
}

IntVector first_generator(std::size_t generators) {
  IntVector x(generators);
  x.at(0) = 1;
  return x;
}

std::string ring_tag_of(const std::vector<std::string>& factor_tags) {
  std::string out;
  for (const auto& tag : factor_tags) {
    if (!out.empty()) out += 'x';
    out += tag;
  }
  return out;
}

// Builds a live annihilator witness: computes the image and requires it to be
// nontrivial (and stable when a multiplier is given).
AnnihilatorWitness make_witness(std::string ring, std::string model, std::string ideal, std::size_t power,
                                std::optional<Integer> multiplier) {
  AnnihilatorWitness w;
  w.ring = std::move(ring);
  w.model = std::move(model);
  w.ideal = std::move(ideal);
  w.power = power;

  const KModelDescriptor descriptor{w.model};
  const RingModule m = descriptor.instantiate();
  const IdealLattice ideal_n = ideal_power(descriptor.ideal(w.ideal), power);
  w.nonzero_group = ideal_image(ideal_n, m);
  if (w.nonzero_group.is_trivial()) {
    throw Error("ideal image vanishes for model " + w.model + " at power " + std::to_string(power));
  }
  if (multiplier) {
    w.stability = AnnihilatorWitness::Stability{*multiplier, first_generator(m.generators())};
    if (!element_stable_nonvanishing(ideal_n, m, w.stability->element, *multiplier)) {
      throw Error("witness for model " + w.model + " does not survive multiplication by " + multiplier->get_str());
    }
  }
  return w;
}

UpperBound add_upper(const UpperBound& a, const UpperBound& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

UpperBound min_upper(const UpperBound& a, const UpperBound& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

UpperBound combine(TensorRule rule, const DimBound& b1, const DimBound& b2) {
  switch (rule) {
    case TensorRule::sum:
      return add_upper(b1.upper, b2.upper);
    case TensorRule::min:
      return min_upper(b1.upper, b2.upper);
    case TensorRule::absorb:
      if (b2.upper != UpperBound{0}) {
        throw InvalidArgument("absorb needs a Rokhlin second factor (upper 0), got upper " + render_upper(b2.upper));
      }
      return b1.upper;
  }
  throw InvalidArgument("unknown tensor rule");
}

std::size_t parse_cyclic_order(std::string_view tag) {
  if (!tag.starts_with('z') || tag.size() < 2) return 0;
  std::size_t n = 0;
  for (char c : tag.substr(1)) {
    if (c < '0' || c > '9') return 0;
    n = n * 10 + static_cast<std::size_t>(c - '0');
    if (n > 1'000'000) return 0;
  }
  return n;
}

void require_odd_order(std::string_view group_tag) {
  const Integer order = group_order(*ring_from_tag(group_tag));
  if (order % 2 == 0) {
    throw InvalidArgument("group '" + std::string(group_tag) + "' has even order " + order.get_str() +
                          "; the Z_2 factor needs an odd-order partner so multiplication by |G| is invertible mod 2");
  }
}

bool validate_annihilator(const AnnihilatorWitness& w, std::size_t lower) {
  if (w.power < lower) return false;
  if (w.nonzero_group.is_trivial()) return false;
  const KModelDescriptor descriptor{w.model};
  const RingModule m = descriptor.instantiate();
  if (!ring_from_tag(w.ring)->same_structure(*m.ring())) return false;
  const IdealLattice ideal_n = ideal_power(descriptor.ideal(w.ideal), w.power);
  if (!(ideal_image(ideal_n, m) == w.nonzero_group)) return false;
  if (w.stability) {
    if (w.stability->element.size() != m.generators() || w.stability->multiplier < 1) return false;
    if (!element_stable_nonvanishing(ideal_n, m, w.stability->element, w.stability->multiplier)) return false;
  }
  return true;
}

bool known_index_group(std::string_view tag) { return tag == "s1" || parse_cyclic_order(tag) >= 2; }

bool validate_lower(const DimBound& b) {
  return std::visit(
      [&](const auto& cert) -> bool {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, NoCertificate>) {
          return b.lower == 0;
        } else if constexpr (std::is_same_v<T, AnnihilatorWitness>) {
          return validate_annihilator(cert, b.lower);
        } else if constexpr (std::is_same_v<T, IndexWitness>) {
          return known_index_group(cert.group) && cert.index >= 1 && b.lower == cert.index - 1;
        } else {
          return false;
        }
      },
      b.lower_certificate);
}

bool validate_upper(const DimBound& b) {
  return std::visit(
      [&](const auto& cert) -> bool {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, NoCertificate>) {
          return !b.upper.has_value();
        } else if constexpr (std::is_same_v<T, JoinFactorWitness>) {
          return cert.copies >= 1 && b.upper == UpperBound{cert.copies - 1};
        } else if constexpr (std::is_same_v<T, IndexWitness>) {
          return known_index_group(cert.group) && cert.index >= 1 && b.upper == UpperBound{cert.index - 1};
        } else if constexpr (std::is_same_v<T, RuleApplication>) {
          if (cert.inputs.size() != 2) return false;
          if (!validate(cert.inputs[0]) || !validate(cert.inputs[1])) return false;
          if (cert.rule == TensorRule::absorb && cert.inputs[1].upper != UpperBound{0}) return false;
          return combine(cert.rule, cert.inputs[0], cert.inputs[1]) == b.upper;
        } else {
          return false;
        }
      },
      b.upper_certificate);
}

}  // namespace

std::string_view rule_name(TensorRule rule) {
  switch (rule) {
    case TensorRule::sum:
      return "sum";
    case TensorRule::min:
      return "min";
    case TensorRule::absorb:
      return "absorb";
  }
  return "?";
}

TensorRule parse_rule(std::string_view name) {
  if (name == "sum") return TensorRule::sum;
  if (name == "min") return TensorRule::min;
  if (name == "absorb") return TensorRule::absorb;
  throw InvalidArgument("unknown tensor rule '" + std::string(name) + "' (expected sum, min or absorb)");
}

std::string render_upper(const UpperBound& upper) { return upper ? std::to_string(*upper) : "inf"; }

DimBound rokhlin_bound() { return {0, 0, NoCertificate{}, JoinFactorWitness{1}}; }

DimBound z2_af_bounds(std::size_t m) {
  if (m < 1) throw InvalidArgument("z2 construction needs m >= 1");
  DimBound b;
  b.lower = m;
  b.upper = 2 * m + 2;
  b.lower_certificate = make_witness("z2", "trunc-z2:" + std::to_string(m + 1), "augmentation", m, std::nullopt);
  b.upper_certificate = JoinFactorWitness{2 * m + 3};
  return b;
}

DimBound circle_ah_dimension(std::size_t d) {
  DimBound b;
  b.lower = d;
  b.upper = d;
  const std::string order = std::to_string(d + 1);
  b.lower_certificate = make_witness("circle:" + order, "circle:" + order, "augmentation", d, Integer(2));
  b.upper_certificate = JoinFactorWitness{d + 1};
  return b;
}

DimBound product_z2_bounds(std::size_t m, std::string_view group_tag) {
  if (m < 1) throw InvalidArgument("product construction needs m >= 1");
  require_odd_order(group_tag);
  const std::string tag(group_tag);
  const Integer order = group_order(*ring_from_tag(tag));
  DimBound b;
  b.lower = m;
  b.lower_certificate = make_witness(ring_tag_of({"z2", tag}),
                                     "trunc-z2:" + std::to_string(m + 1) + " * trunc:" + tag + ":1", "factor:0", m,
                                     order);
  const DimBound combined = tensor_rule(TensorRule::absorb, z2_af_bounds(m), rokhlin_bound());
  b.upper = combined.upper;
  b.upper_certificate = combined.upper_certificate;
  return b;
}

DimBound circle_product_dimension(std::size_t d, std::string_view group_tag) {
  const std::string tag(group_tag);
  ring_from_tag(tag);
  const std::string order = std::to_string(d + 1);
  DimBound b;
  b.lower = d;
  b.lower_certificate =
      make_witness(ring_tag_of({"circle:" + order, tag}), "circle:" + order + " * trunc:" + tag + ":1", "factor:0",
                   d, Integer(2));
  const DimBound combined = tensor_rule(TensorRule::absorb, circle_ah_dimension(d), rokhlin_bound());
  b.upper = combined.upper;
  b.upper_certificate = combined.upper_certificate;
  return b;
}

DimBound cyclic_product_lower_bound(std::size_t p, std::size_t m, std::string_view group_tag) {
  if (p < 2) throw InvalidArgument("cyclic factor needs order p >= 2");
  if (m < 1) throw InvalidArgument("cyclic product construction needs m >= 1");
  const std::string tag(group_tag);
  const Integer order = group_order(*ring_from_tag(tag));
  const Integer pz(static_cast<unsigned long>(p));
  if (gcd(order, pz) != 1) {
    throw InvalidArgument("|" + tag + "| = " + order.get_str() + " is not coprime to p = " + std::to_string(p));
  }
  const std::string zp = "z" + std::to_string(p);
  DimBound b;
  b.lower = m;
  b.lower_certificate = make_witness(ring_tag_of({zp, tag}),
                                     "trunc:" + zp + ":" + std::to_string(m + 1) + " * trunc:" + tag + ":1",
                                     "factor:0", m, order);
  return b;
}

DimBound tensor_rule(TensorRule rule, const DimBound& b1, const DimBound& b2) {
  DimBound out;
  out.upper = combine(rule, b1, b2);
  out.upper_certificate = RuleApplication{rule, {b1, b2}};
  return out;
}

Z6CollapseReport z6_collapse_report(std::size_t d) {
  if (d < 1) throw InvalidArgument("z6 collapse needs d >= 1");
  Z6CollapseReport r;
  r.d = d;
  r.factor1 = product_z2_bounds(d + 1, "z3");
  r.factor2 = cyclic_product_lower_bound(3, d + 1, "z2");
  // The diagonal Z_6 action splits as (B_1 (x) B_2) (x) (D_1 (x) D_2); the
  // UHF part is a product of two Rokhlin actions.
  const DimBound af_part{0, std::nullopt, NoCertificate{}, NoCertificate{}};
  const DimBound uhf_part = tensor_rule(TensorRule::sum, rokhlin_bound(), rokhlin_bound());
  r.product = tensor_rule(TensorRule::min, af_part, uhf_part);
  r.factors_exceed_d = r.factor1.lower > d && r.factor2.lower > d;
  r.product_is_rokhlin = r.product.upper == UpperBound{0};
  return r;
}

CommutativeDimension commutative_dimension(std::string_view group_tag, std::size_t copies) {
  if (copies < 1) throw InvalidArgument("join needs at least one copy");
  if (!known_index_group(group_tag)) {
    throw Unsupported("commutative case supports z2, s1 and z<n> (n >= 2), got '" + std::string(group_tag) + "'");
  }
  CommutativeDimension out;
  out.ind = copies;
  out.dim = copies - 1;
  const IndexWitness w{std::string(group_tag), copies};
  out.bound = {out.dim, out.dim, w, w};
  if (group_tag == "z2" && copies <= kSphereCheckMaxCopies) {
    const JoinComplex complex = build_join_complex(2, copies);
    out.sphere_check = is_sphere_homology(reduced_homology(boundary_matrices(complex)), copies - 1);
  }
  return out;
}

FiniteAfOutcome finite_af_bounds(std::string_view group_tag, std::size_t n) {
  if (n < 1) throw InvalidArgument("finite construction needs n >= 1");
  if (group_tag == "z2") return z2_af_bounds(n + 1);
  return ExistenceOnly{std::string(group_tag), n,
                       "some odd number of join copies k with I(G)^n K_G(G^{*k}) nonzero exists, but no effective k "
                       "is known for this group"};
}

bool validate(const DimBound& bound) {
  try {
    if (bound.upper && bound.lower > *bound.upper) return false;
    return validate_lower(bound) && validate_upper(bound);
  } catch (const Error&) {
    return false;
  }
}

bool validate(const Z6CollapseReport& report) {
  return validate(report.factor1) && validate(report.factor2) && validate(report.product) &&
         report.factors_exceed_d == (report.factor1.lower > report.d && report.factor2.lower > report.d) &&
         report.product_is_rokhlin == (report.product.upper == UpperBound{0});
}

}  // namespace equik
