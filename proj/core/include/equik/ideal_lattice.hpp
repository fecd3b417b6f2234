#pragma once

#include <cstddef>

#include "equik/abelian_group.hpp"
#include "equik/based_ring.hpp"

namespace equik {

inline constexpr std::size_t kDefaultProductCap = 200'000;

// A sublattice of a based ring that is closed under multiplication by every
// basis element, stored by its Hermite basis (rows in ring coordinates).
class IdealLattice {
 public:
  // Spans `generators` (rows) and checks ideal closure; throws
  // InvalidArgument naming the basis row and ring basis element otherwise.
  IdealLattice(RingRef ring, const IntMatrix& generators);

  static IdealLattice full(RingRef ring);
  static IdealLattice zero(RingRef ring);

  const RingRef& ring() const noexcept { return ring_; }
  const IntMatrix& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  bool contains(const RingElement& a) const;
  bool contains(const IdealLattice& other) const;
  RingElement basis_element(std::size_t i) const { return {basis_.row_vector(i)}; }

  friend bool operator==(const IdealLattice& a, const IdealLattice& b);

 private:
  RingRef ring_;
  IntMatrix basis_;
};

// Kernel of the augmentation a -> sum_i a_i dims_i.
IdealLattice augmentation_ideal(const RingRef& ring);

// I^n for the augmentation ideal I; n = 0 is the whole ring.
IdealLattice ideal_power(const RingRef& ring, std::size_t n, std::size_t cap = kDefaultProductCap);
// J^n for an arbitrary ideal J. Each step multiplies the running Hermite
// basis by the generators of J; throws CapExceeded when a step would form more
// than `cap` products.
IdealLattice ideal_power(const IdealLattice& ideal, std::size_t n, std::size_t cap = kDefaultProductCap);

// Product ideal J * K (Z-span of pairwise products).
IdealLattice ideal_product(const IdealLattice& a, const IdealLattice& b, std::size_t cap = kDefaultProductCap);

// L1 / L2 for L2 inside L1; throws ContainmentError with a witness otherwise.
FgAbelianGroup lattice_quotient(const IdealLattice& larger, const IdealLattice& smaller);

struct RegularClassCheck {
  RingElement regular;
  bool annihilated = false;
};

// reg = sum_i dims_i e_i; annihilated iff every augmentation ideal generator
// kills it.
RegularClassCheck regular_class_check(const RingRef& ring);

// Coefficients (n_1, ..., n_{p-1}) with l^p = sum_j n_j l^j in R(Z_p),
// l = 1 - sigma. Requires odd p >= 3; even p throws Unsupported.
IntVector lambda_expansion(std::size_t p);

// The ideal spanned by l^j, ..., l^{n-1} in R(S^1)/I(S^1)^n.
IdealLattice circle_ideal_image(std::size_t n, std::size_t j);

// J (x) K inside R1 (x) R2 (Kronecker product of the Hermite bases).
IdealLattice tensor_ideals(const IdealLattice& left, const IdealLattice& right);

// Extension of an ideal of one factor to a product ring: J (x) R(other) when
// `ideal_on_left`, R(other) (x) J otherwise. The product ring is rebuilt with
// product_ring() so it matches models built the same way.
IdealLattice tensor_ideal(const IdealLattice& ideal, const RingRef& other, bool ideal_on_left);

}  // namespace equik
