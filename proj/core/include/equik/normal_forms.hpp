#pragma once

#include <optional>
#include <span>
#include <vector>

#include "equik/int_matrix.hpp"

namespace equik {

// U * A * V = D with U, V unimodular and D diagonal, nonzero diagonal
// entries positive with d_i | d_{i+1}.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::size_t rank() const;
  // The nonzero diagonal entries d_1 | d_2 | ... in order.
  IntVector invariant_factors() const;
};

// transform * A = h, h in row-style Hermite form: upper echelon, pivots
// positive, entries above each pivot reduced into [0, pivot), zero rows last.
struct HnfResult {
  IntMatrix h;
  IntMatrix transform;

  std::size_t rank() const;
};

SnfDecomposition snf(const IntMatrix& a);
HnfResult hnf(const IntMatrix& a);

// Invariant factors only, without accumulating transforms.
IntVector smith_invariants(const IntMatrix& a);
std::size_t matrix_rank(const IntMatrix& a);

// Nonzero rows of the Hermite form: the canonical basis of the row lattice.
IntMatrix hnf_basis(const IntMatrix& a);

// Basis of {x : x * A = 0}, in Hermite form. Shape (kernel rank) x A.rows().
IntMatrix kernel_basis(const IntMatrix& a);

struct CokernelInvariants {
  std::size_t free_rank = 0;
  IntVector torsion;  // each > 1, each dividing the next
};

// Z^cols modulo the row span of A.
CokernelInvariants cokernel_invariants(const IntMatrix& a);

// Lattice helpers. `basis` must be a Hermite basis (full row rank, echelon).
bool lattice_contains(const IntMatrix& basis, std::span<const Integer> v);
std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, std::span<const Integer> v);
bool lattice_subset(const IntMatrix& sub_basis, const IntMatrix& basis);

// Some x with x * A = v, if one exists.
std::optional<IntVector> solve_left(const IntMatrix& a, std::span<const Integer> v);

}  // namespace equik
