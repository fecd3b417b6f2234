#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "equik/abelian_group.hpp"
#include "equik/based_ring.hpp"
#include "equik/ideal_lattice.hpp"

namespace equik {

// A finitely presented module over a based ring: Z^generators modulo the row
// lattice `relations`, with e_i acting by x -> x * action(i). The module
// axioms are checked modulo relations at construction.
class RingModule {
 public:
  RingModule(RingRef ring, std::size_t generators, const IntMatrix& relations, std::vector<IntMatrix> action);

  static RingModule zero(RingRef ring);

  const RingRef& ring() const noexcept { return ring_; }
  std::size_t generators() const noexcept { return generators_; }
  // Hermite basis of the relation lattice.
  const IntMatrix& relations() const noexcept { return relations_; }
  const IntMatrix& action(std::size_t i) const { return action_.at(i); }
  const std::vector<IntMatrix>& actions() const noexcept { return action_; }

  // Matrix of x -> a . x.
  IntMatrix act(const RingElement& a) const;
  bool is_zero_element(std::span<const Integer> x) const;
  FgAbelianGroup underlying_group() const;

 private:
  RingRef ring_;
  std::size_t generators_;
  IntMatrix relations_;
  std::vector<IntMatrix> action_;
};

struct GradedModulePair {
  RingModule even;
  RingModule odd;
};

// R / I^n with the regular action.
RingModule truncated_ring_module(const RingRef& ring, std::size_t n);
// R(S^1)/I(S^1)^n: free of rank n on l^0..l^{n-1} over the truncated circle ring.
RingModule circle_module(std::size_t n);
// Matrix of the generator t = 1 - l on circle_module(n).
IntMatrix circle_generator_action(std::size_t n);

RingModule module_direct_sum(const RingModule& a, const RingModule& b);
// M (x)_Z N as a module over product_ring(M.ring, N.ring); generators are
// indexed i * N.generators + j and the action is by Kronecker products.
RingModule tensor_modules(const RingModule& a, const RingModule& b);

// The subgroup generated by a . g for a in the ideal basis and g a generator.
FgAbelianGroup ideal_image(const IdealLattice& ideal, const RingModule& m);
// The subgroup generated by a . x for a in the ideal basis.
FgAbelianGroup element_ideal_image(const IdealLattice& ideal, const RingModule& m, std::span<const Integer> x);

// Largest n <= cap with I^n M != 0, or -1 when M itself is trivial.
long max_nonvanishing_power(const RingModule& m, std::size_t cap);

// True iff I^n (N^j x) != 0 for every j >= 0. Decided from the structure of
// I^n x: it survives iff it has a free part or torsion with a prime factor
// not dividing N.
bool element_stable_nonvanishing(const RingModule& m, std::span<const Integer> x, std::size_t n,
                                 const Integer& multiplier);
bool element_stable_nonvanishing(const IdealLattice& ideal_power, const RingModule& m, std::span<const Integer> x,
                                 const Integer& multiplier);

struct KunnethPieces {
  RingModule tensor_part;
  FgAbelianGroup tor_part;
};

KunnethPieces kunneth_pieces(const RingModule& mg, const RingModule& mh);

// Degree n collects tensor terms with i + j = n and Tor terms with
// i + j = n + 1 (mod 2).
struct GradedKunneth {
  RingModule even_tensor;
  RingModule odd_tensor;
  FgAbelianGroup even_tor;
  FgAbelianGroup odd_tor;
};

GradedKunneth graded_kunneth(const GradedModulePair& pg, const GradedModulePair& ph);

// Built-in K-theory models addressed by name:
//   trunc-z2:l      R(Z_2)/I(Z_2)^l
//   circle:n        R(S^1)/I(S^1)^n
//   trunc:<ring>:n  R/I^n for a ring tag accepted by ring_from_tag
// Models joined by '*' denote the tensor piece of their Kunneth sequence.
struct KModelDescriptor {
  std::string text;

  std::vector<std::string> factors() const;
  RingModule instantiate() const;
  // Ring of each factor, in order.
  std::vector<RingRef> factor_rings() const;
  // "augmentation" (the augmentation ideal of the whole ring) or "factor:<i>"
  // (augmentation ideal of factor i tensored with the full other factors).
  IdealLattice ideal(std::string_view which) const;
};

}  // namespace equik
