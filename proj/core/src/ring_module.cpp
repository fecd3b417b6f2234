#include "equik/ring_module.hpp"

#include <charconv>

#include "equik/error.hpp"
#include "equik/normal_forms.hpp"

namespace equik {

namespace {

bool rows_in_lattice(const IntMatrix& m, const IntMatrix& lattice) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!lattice_contains(lattice, m.row(i))) return false;
  }
  return true;
}

// Isomorphism class of the subgroup of Z^g / L generated by the rows of
// `gens`, where `relations` is a Hermite basis of L.
FgAbelianGroup generated_subgroup(const IntMatrix& gens, const IntMatrix& relations) {
  const IntMatrix span = hnf_basis(vstack(gens, relations));
  Presentation p{span.rows(), IntMatrix(0, span.rows())};
  for (std::size_t i = 0; i < relations.rows(); ++i) {
    auto coords = lattice_coordinates(span, relations.row(i));
    if (!coords) throw Error("relation lattice escaped its own span");
    p.relations.append_row(*coords);
  }
  return normalize(p);
}

void require_same_ring(const BasedRing& a, const BasedRing& b, const char* what) {
  if (!a.same_structure(b)) throw InvalidArgument(std::string(what) + ": ring mismatch");
}

}  // namespace

RingModule::RingModule(RingRef ring, std::size_t generators, const IntMatrix& relations,
                       std::vector<IntMatrix> action)
    : ring_(std::move(ring)), generators_(generators), action_(std::move(action)) {
  const std::size_t r = ring_->rank();
  if (relations.cols() != generators) throw InvalidArgument("module relations have the wrong width");
  if (action_.size() != r) throw InvalidArgument("module needs one action matrix per ring basis element");
  for (const auto& a : action_) {
    if (a.rows() != generators || a.cols() != generators) throw InvalidArgument("action matrix has the wrong shape");
  }
  relations_ = hnf_basis(relations);

  if (!rows_in_lattice(action_[0] - IntMatrix::identity(generators), relations_)) {
    throw InvalidArgument("module axiom fails: unit does not act as the identity");
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows_in_lattice(relations_ * action_[i], relations_)) {
      throw InvalidArgument("module axiom fails: relations not invariant under e_" + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const IntMatrix ij = action_[i] * action_[j];
      if (!rows_in_lattice(ij - action_[j] * action_[i], relations_)) {
        throw InvalidArgument("module axiom fails: e_" + std::to_string(i) + " and e_" + std::to_string(j) +
                              " do not commute");
      }
      IntMatrix expected(generators, generators);
      for (const auto& term : ring_->product(i, j)) expected = expected + term.coefficient * action_[term.index];
      if (!rows_in_lattice(ij - expected, relations_)) {
        throw InvalidArgument("module axiom fails: action of e_" + std::to_string(i) + " e_" + std::to_string(j) +
                              " disagrees with the fusion rule");
      }
    }
  }
}

RingModule RingModule::zero(RingRef ring) {
  const std::size_t r = ring->rank();
  return RingModule(std::move(ring), 0, IntMatrix(0, 0), std::vector<IntMatrix>(r, IntMatrix(0, 0)));
}

IntMatrix RingModule::act(const RingElement& a) const {
  if (a.coefficients.size() != ring_->rank()) throw InvalidArgument("ring element length does not match ring rank");
  IntMatrix out(generators_, generators_);
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    if (sgn(a.coefficients[i]) != 0) out = out + a.coefficients[i] * action_[i];
  }
  return out;
}

bool RingModule::is_zero_element(std::span<const Integer> x) const { return lattice_contains(relations_, x); }

FgAbelianGroup RingModule::underlying_group() const { return normalize({generators_, relations_}); }

RingModule truncated_ring_module(const RingRef& ring, std::size_t n) {
  if (n == 0) throw InvalidArgument("truncation order must be at least 1");
  std::vector<IntMatrix> action;
  for (std::size_t i = 0; i < ring->rank(); ++i) action.push_back(ring->multiplication_matrix(ring->basis(i)));
  return RingModule(ring, ring->rank(), ideal_power(ring, n).basis(), std::move(action));
}

RingModule circle_module(std::size_t n) {
  const CircleRingTruncation circle(n);
  const RingRef& ring = circle.ring();
  std::vector<IntMatrix> action;
  for (std::size_t i = 0; i < n; ++i) action.push_back(ring->multiplication_matrix(ring->basis(i)));
  return RingModule(ring, n, IntMatrix(0, n), std::move(action));
}

IntMatrix circle_generator_action(std::size_t n) {
  const CircleRingTruncation circle(n);
  return circle_module(n).act(circle.t());
}

RingModule module_direct_sum(const RingModule& a, const RingModule& b) {
  require_same_ring(*a.ring(), *b.ring(), "module direct sum");
  std::vector<IntMatrix> action;
  for (std::size_t i = 0; i < a.ring()->rank(); ++i) action.push_back(block_diagonal(a.action(i), b.action(i)));
  return RingModule(a.ring(), a.generators() + b.generators(), block_diagonal(a.relations(), b.relations()),
                    std::move(action));
}

RingModule tensor_modules(const RingModule& a, const RingModule& b) {
  RingRef ring = product_ring(a.ring(), b.ring());
  std::vector<IntMatrix> action;
  for (std::size_t i = 0; i < a.ring()->rank(); ++i) {
    for (std::size_t j = 0; j < b.ring()->rank(); ++j) action.push_back(kronecker(a.action(i), b.action(j)));
  }
  const IntMatrix relations = vstack(kronecker(a.relations(), IntMatrix::identity(b.generators())),
                                     kronecker(IntMatrix::identity(a.generators()), b.relations()));
  return RingModule(std::move(ring), a.generators() * b.generators(), relations, std::move(action));
}

FgAbelianGroup ideal_image(const IdealLattice& ideal, const RingModule& m) {
  require_same_ring(*ideal.ring(), *m.ring(), "ideal image");
  IntMatrix gens(0, m.generators());
  for (std::size_t i = 0; i < ideal.rank(); ++i) {
    const IntMatrix a = m.act(ideal.basis_element(i));
    for (std::size_t g = 0; g < m.generators(); ++g) gens.append_row(a.row(g));
  }
  return generated_subgroup(gens, m.relations());
}

FgAbelianGroup element_ideal_image(const IdealLattice& ideal, const RingModule& m, std::span<const Integer> x) {
  require_same_ring(*ideal.ring(), *m.ring(), "element ideal image");
  if (x.size() != m.generators()) throw InvalidArgument("module element has the wrong length");
  IntMatrix gens(0, m.generators());
  for (std::size_t i = 0; i < ideal.rank(); ++i) gens.append_row(x * m.act(ideal.basis_element(i)));
  return generated_subgroup(gens, m.relations());
}

long max_nonvanishing_power(const RingModule& m, std::size_t cap) {
  const IdealLattice aug = augmentation_ideal(m.ring());
  IdealLattice power = IdealLattice::full(m.ring());
  for (std::size_t n = 0; n <= cap; ++n) {
    if (n > 0) power = ideal_product(power, aug);
    if (ideal_image(power, m).is_trivial()) return static_cast<long>(n) - 1;
  }
  return static_cast<long>(cap);
}

bool element_stable_nonvanishing(const IdealLattice& ideal_power, const RingModule& m, std::span<const Integer> x,
                                 const Integer& multiplier) {
  if (multiplier < 1) throw InvalidArgument("stability multiplier must be >= 1");
  const FgAbelianGroup image = element_ideal_image(ideal_power, m, x);
  if (image.free_rank > 0) return true;
  for (const auto& t : image.torsion) {
    Integer rest = t;
    for (Integer g = gcd(rest, multiplier); g > 1; g = gcd(rest, multiplier)) rest /= g;
    if (rest > 1) return true;
  }
  return false;
}

bool element_stable_nonvanishing(const RingModule& m, std::span<const Integer> x, std::size_t n,
                                 const Integer& multiplier) {
  return element_stable_nonvanishing(ideal_power(m.ring(), n), m, x, multiplier);
}

KunnethPieces kunneth_pieces(const RingModule& mg, const RingModule& mh) {
  return {tensor_modules(mg, mh), tor(mg.underlying_group(), mh.underlying_group())};
}

GradedKunneth graded_kunneth(const GradedModulePair& pg, const GradedModulePair& ph) {
  const auto g = [](const RingModule& a, const RingModule& b) { return tor(a.underlying_group(), b.underlying_group()); };
  return {
      module_direct_sum(tensor_modules(pg.even, ph.even), tensor_modules(pg.odd, ph.odd)),
      module_direct_sum(tensor_modules(pg.even, ph.odd), tensor_modules(pg.odd, ph.even)),
      direct_sum(g(pg.even, ph.odd), g(pg.odd, ph.even)),
      direct_sum(g(pg.even, ph.even), g(pg.odd, ph.odd)),
  };
}

namespace {

std::size_t parse_order(std::string_view text, std::string_view descriptor) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || value == 0) {
    throw InvalidArgument("bad order in model descriptor '" + std::string(descriptor) + "'");
  }
  return value;
}

struct Atom {
  RingRef ring;
  std::size_t order;
  bool circle;
};

Atom parse_atom(std::string_view atom) {
  if (atom.starts_with("trunc-z2:")) return {cyclic_ring(2), parse_order(atom.substr(9), atom), false};
  if (atom.starts_with("circle:")) {
    const std::size_t n = parse_order(atom.substr(7), atom);
    return {CircleRingTruncation(n).ring(), n, true};
  }
  if (atom.starts_with("trunc:")) {
    const std::string_view rest = atom.substr(6);
    const std::size_t colon = rest.rfind(':');
    if (colon == std::string_view::npos) throw InvalidArgument("model 'trunc:<ring>:n' is missing n");
    return {ring_from_tag(rest.substr(0, colon)), parse_order(rest.substr(colon + 1), atom), false};
  }
  throw Unsupported("unknown K-theory model '" + std::string(atom) + "' (expected trunc-z2:l, circle:n, trunc:<ring>:n)");
}

RingModule instantiate_atom(const Atom& atom) {
  return atom.circle ? circle_module(atom.order) : truncated_ring_module(atom.ring, atom.order);
}

}  // namespace

std::vector<std::string> KModelDescriptor::factors() const {
  std::vector<std::string> out;
  std::string_view rest = text;
  while (true) {
    const std::size_t star = rest.find('*');
    std::string_view part = rest.substr(0, star);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part.empty()) throw InvalidArgument("empty factor in model descriptor '" + text + "'");
    out.emplace_back(part);
    if (star == std::string_view::npos) break;
    rest.remove_prefix(star + 1);
  }
  return out;
}

RingModule KModelDescriptor::instantiate() const {
  const auto parts = factors();
  RingModule out = instantiate_atom(parse_atom(parts[0]));
  for (std::size_t i = 1; i < parts.size(); ++i) out = tensor_modules(out, instantiate_atom(parse_atom(parts[i])));
  return out;
}

std::vector<RingRef> KModelDescriptor::factor_rings() const {
  std::vector<RingRef> out;
  for (const auto& part : factors()) out.push_back(parse_atom(part).ring);
  return out;
}

IdealLattice KModelDescriptor::ideal(std::string_view which) const {
  const auto rings = factor_rings();
  if (which == "augmentation") {
    RingRef ring = rings[0];
    for (std::size_t i = 1; i < rings.size(); ++i) ring = product_ring(ring, rings[i]);
    return augmentation_ideal(ring);
  }
  if (which.starts_with("factor:")) {
    const std::string_view digits = which.substr(7);
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw InvalidArgument("bad ideal factor index in '" + std::string(which) + "'");
    }
    if (index >= rings.size()) throw InvalidArgument("ideal factor index out of range in '" + std::string(which) + "'");
    auto piece = [&](std::size_t i) { return i == index ? augmentation_ideal(rings[i]) : IdealLattice::full(rings[i]); };
    IdealLattice out = piece(0);
    for (std::size_t i = 1; i < rings.size(); ++i) out = tensor_ideals(out, piece(i));
    return out;
  }
  throw InvalidArgument("unknown ideal '" + std::string(which) + "' (expected augmentation or factor:<i>)");
}

}  // namespace equik
