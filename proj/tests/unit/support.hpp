#pragma once

// Random generators and brute-force oracles shared by the unit tests. The
// oracles deliberately avoid the library's normal-form code paths.

#include <cstdint>
#include <random>

#include "equik/abelian_group.hpp"
#include "equik/int_matrix.hpp"

namespace equik::testing {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);
// Product of random elementary operations; determinant +-1.
IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12);
// Rank <= max_rank, torsion entries in [2, max_torsion], not necessarily canonical.
FgAbelianGroup random_group(Rng& rng, std::size_t max_rank, long max_torsion, std::size_t max_factors);
// A presentation of g with injective, scrambled relation matrix.
Presentation scrambled_presentation(Rng& rng, const FgAbelianGroup& g);

// Fraction-free (Bareiss) determinant.
Integer bareiss_determinant(const IntMatrix& a);
// Rank over Q by fraction-free elimination.
std::size_t bareiss_rank(const IntMatrix& a);
// gcd of all k x k minors (0 if all vanish); k = 0 gives 1.
Integer minor_gcd(const IntMatrix& a, std::size_t k);

// Tensor product from presentations: Z^{ga gb} modulo R_a (x) I and I (x) R_b.
FgAbelianGroup tensor_oracle(const Presentation& a, const Presentation& b);
// Tor_1 as H_1 of the tensor product of two free resolutions of length one.
// Relation matrices must be injective.
FgAbelianGroup tor_oracle(const Presentation& a, const Presentation& b);

}  // namespace equik::testing
