#include "equik/abelian_group.hpp"

#include <sstream>

#include "equik/error.hpp"
#include "equik/normal_forms.hpp"

namespace equik {

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& order) {
  return from_cyclic_factors(0, {order});
}

FgAbelianGroup FgAbelianGroup::from_cyclic_factors(std::size_t free, const IntVector& orders) {
  IntVector finite;
  for (const auto& o : orders) {
    if (sgn(o) == 0) {
      ++free;
    } else if (abs(o) > 1) {
      finite.push_back(abs(o));
    }
  }
  const std::size_t n = finite.size();
  FgAbelianGroup g;
  g.free_rank = free;
  for (const auto& d : smith_invariants(IntMatrix::diagonal(n, n, finite))) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

Integer FgAbelianGroup::torsion_order() const {
  Integer out = 1;
  for (const auto& d : torsion) out *= d;
  return out;
}

FgAbelianGroup normalize(const Presentation& p) {
  if (p.relations.cols() != p.generators) {
    throw InvalidArgument("presentation relation width " + std::to_string(p.relations.cols()) +
                          " differs from generator count " + std::to_string(p.generators));
  }
  const CokernelInvariants inv = cokernel_invariants(p.relations);
  return {inv.free_rank, inv.torsion};
}

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  IntVector orders;
  for (std::size_t i = 0; i < a.free_rank; ++i) orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  for (std::size_t i = 0; i < b.free_rank; ++i) orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
  for (const auto& d : a.torsion) {
    for (const auto& e : b.torsion) orders.push_back(gcd(d, e));
  }
  return FgAbelianGroup::from_cyclic_factors(a.free_rank * b.free_rank, orders);
}

FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  IntVector orders;
  for (const auto& d : a.torsion) {
    for (const auto& e : b.torsion) orders.push_back(gcd(d, e));
  }
  return FgAbelianGroup::from_cyclic_factors(0, orders);
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  IntVector orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return FgAbelianGroup::from_cyclic_factors(a.free_rank + b.free_rank, orders);
}

Presentation presentation_of(const FgAbelianGroup& g) {
  const std::size_t k = g.torsion.size();
  Presentation p{g.free_rank + k, IntMatrix(k, g.free_rank + k)};
  for (std::size_t i = 0; i < k; ++i) p.relations(i, g.free_rank + i) = g.torsion[i];
  return p;
}

std::string render(const FgAbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (g.free_rank == 1) {
    os << "Z";
    first = false;
  } else if (g.free_rank > 1) {
    os << "Z^" << g.free_rank;
    first = false;
  }
  for (const auto& d : g.torsion) {
    if (!first) os << " ⊕ ";
    os << "Z_" << d.get_str();
    first = false;
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

FgAbelianGroup parse_group(std::string_view text) {
  std::string normalized(text);
  for (std::size_t pos; (pos = normalized.find("⊕")) != std::string::npos;) {
    normalized.replace(pos, std::string("⊕").size(), "+");
  }
  std::size_t free = 0;
  IntVector orders;
  std::string_view rest(normalized);
  while (true) {
    const std::size_t plus = rest.find('+');
    const std::string_view term = trim(rest.substr(0, plus));
    if (term == "0") {
      // trivial summand
    } else if (term == "Z") {
      ++free;
    } else if (term.starts_with("Z^")) {
      const Integer r = parse_integer(term.substr(2));
      if (r < 0 || !r.fits_ulong_p()) throw InvalidArgument("bad free rank in group '" + std::string(text) + "'");
      free += r.get_ui();
    } else if (term.starts_with("Z_")) {
      std::string_view order = term.substr(2);
      if (order.starts_with('{') && order.ends_with('}')) order = order.substr(1, order.size() - 2);
      const Integer d = parse_integer(order);
      if (d < 1) throw InvalidArgument("cyclic order must be positive in '" + std::string(text) + "'");
      orders.push_back(d);
    } else {
      throw InvalidArgument("cannot parse group summand '" + std::string(term) + "'");
    }
    if (plus == std::string_view::npos) break;
    rest.remove_prefix(plus + 1);
  }
  return FgAbelianGroup::from_cyclic_factors(free, orders);
}

}  // namespace equik
