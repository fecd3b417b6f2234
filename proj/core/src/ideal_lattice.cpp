#include "equik/ideal_lattice.hpp"

#include "equik/error.hpp"
#include "equik/normal_forms.hpp"

namespace equik {

IdealLattice::IdealLattice(RingRef ring, const IntMatrix& generators) : ring_(std::move(ring)) {
  if (generators.cols() != ring_->rank()) {
    throw InvalidArgument("ideal generators have " + std::to_string(generators.cols()) +
                          " coordinates, ring rank is " + std::to_string(ring_->rank()));
  }
  basis_ = hnf_basis(generators);
  for (std::size_t b = 0; b < basis_.rows(); ++b) {
    const RingElement v = basis_element(b);
    for (std::size_t i = 1; i < ring_->rank(); ++i) {
      if (!contains(multiply(*ring_, ring_->basis(i), v))) {
        throw InvalidArgument("lattice is not an ideal: basis row " + std::to_string(b) + " times e_" +
                              std::to_string(i) + " leaves it");
      }
    }
  }
}

IdealLattice IdealLattice::full(RingRef ring) {
  const std::size_t r = ring->rank();
  return IdealLattice(std::move(ring), IntMatrix::identity(r));
}

IdealLattice IdealLattice::zero(RingRef ring) {
  const std::size_t r = ring->rank();
  return IdealLattice(std::move(ring), IntMatrix(0, r));
}

bool IdealLattice::contains(const RingElement& a) const { return lattice_contains(basis_, a.coefficients); }

bool IdealLattice::contains(const IdealLattice& other) const { return lattice_subset(other.basis_, basis_); }

bool operator==(const IdealLattice& a, const IdealLattice& b) {
  return a.ring_->same_structure(*b.ring_) && a.basis_ == b.basis_;
}

IdealLattice augmentation_ideal(const RingRef& ring) {
  IntMatrix dims(ring->rank(), 1);
  for (std::size_t i = 0; i < ring->rank(); ++i) dims(i, 0) = ring->dims()[i];
  return IdealLattice(ring, kernel_basis(dims));
}

IdealLattice ideal_product(const IdealLattice& a, const IdealLattice& b, std::size_t cap) {
  if (!a.ring()->same_structure(*b.ring())) throw InvalidArgument("ideal product over different rings");
  if (a.rank() * b.rank() > cap) {
    throw CapExceeded("ideal product would form " + std::to_string(a.rank() * b.rank()) +
                      " generator products, cap is " + std::to_string(cap));
  }
  const BasedRing& ring = *a.ring();
  IntMatrix gens(0, ring.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    const RingElement x = a.basis_element(i);
    for (std::size_t j = 0; j < b.rank(); ++j) {
      gens.append_row(multiply(ring, x, b.basis_element(j)).coefficients);
    }
  }
  return IdealLattice(a.ring(), gens);
}

IdealLattice ideal_power(const IdealLattice& ideal, std::size_t n, std::size_t cap) {
  IdealLattice out = IdealLattice::full(ideal.ring());
  if (n == 0) return out;
  out = ideal;
  for (std::size_t k = 1; k < n; ++k) {
    if (out.rank() == 0) break;
    out = ideal_product(out, ideal, cap);
  }
  return out;
}

IdealLattice ideal_power(const RingRef& ring, std::size_t n, std::size_t cap) {
  if (n == 0) return IdealLattice::full(ring);
  return ideal_power(augmentation_ideal(ring), n, cap);
}

FgAbelianGroup lattice_quotient(const IdealLattice& larger, const IdealLattice& smaller) {
  if (!larger.ring()->same_structure(*smaller.ring())) throw InvalidArgument("lattice quotient over different rings");
  Presentation p{larger.rank(), IntMatrix(0, larger.rank())};
  for (std::size_t i = 0; i < smaller.rank(); ++i) {
    auto coords = lattice_coordinates(larger.basis(), smaller.basis().row(i));
    if (!coords) throw ContainmentError(smaller.basis().row_vector(i));
    p.relations.append_row(*coords);
  }
  return normalize(p);
}

RegularClassCheck regular_class_check(const RingRef& ring) {
  RegularClassCheck out{{ring->dims()}, true};
  const IdealLattice aug = augmentation_ideal(ring);
  for (std::size_t i = 0; i < aug.rank(); ++i) {
    if (!is_zero(multiply(*ring, aug.basis_element(i), out.regular).coefficients)) {
      out.annihilated = false;
      break;
    }
  }
  return out;
}

IntVector lambda_expansion(std::size_t p) {
  if (p % 2 == 0) {
    throw Unsupported("lambda expansion is only available for odd p; use the ideal-power filtration for p = 2");
  }
  if (p < 3) throw InvalidArgument("lambda expansion needs p >= 3");
  const RingRef ring = cyclic_ring(p);
  const RingElement lambda = subtract(ring->unit(), ring->basis(1));

  IntMatrix powers(0, p);
  RingElement current = lambda;
  for (std::size_t j = 1; j < p; ++j) {
    powers.append_row(current.coefficients);
    current = multiply(*ring, current, lambda);
  }
  // current == lambda^p
  auto coeffs = solve_left(powers, current.coefficients);
  if (!coeffs) throw Error("lambda^p is not in the integer span of lambda..lambda^{p-1}");
  if ((*coeffs)[0] != -Integer(static_cast<unsigned long>(p))) {
    throw Error("lambda expansion produced n_1 = " + (*coeffs)[0].get_str() + ", expected -p");
  }
  return *coeffs;
}

IdealLattice circle_ideal_image(std::size_t n, std::size_t j) {
  CircleRingTruncation circle(n);
  IntMatrix gens(0, n);
  for (std::size_t i = j; i < n; ++i) gens.append_row(circle.ring()->basis(i).coefficients);
  return IdealLattice(circle.ring(), gens);
}

IdealLattice tensor_ideals(const IdealLattice& left, const IdealLattice& right) {
  return IdealLattice(product_ring(left.ring(), right.ring()), kronecker(left.basis(), right.basis()));
}

IdealLattice tensor_ideal(const IdealLattice& ideal, const RingRef& other, bool ideal_on_left) {
  return ideal_on_left ? tensor_ideals(ideal, IdealLattice::full(other))
                       : tensor_ideals(IdealLattice::full(other), ideal);
}

}  // namespace equik
