#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "equik/abelian_group.hpp"
#include "equik/int_matrix.hpp"

namespace equik {

inline constexpr std::size_t kJoinTopFaceCap = 100'000;

// The k-fold join of a discrete N-point set, realized as the complete
// k-partite simplicial complex on vertices (part, element). Vertex id is
// part * N + element; faces pick at most one vertex per part.
class JoinComplex {
 public:
  using Face = std::vector<std::uint32_t>;  // sorted vertex ids

  // Throws CapExceeded when N^k exceeds `cap`.
  JoinComplex(std::size_t set_size, std::size_t parts, std::size_t cap = kJoinTopFaceCap);

  std::size_t set_size() const noexcept { return set_size_; }
  std::size_t parts() const noexcept { return parts_; }
  std::size_t dimension() const noexcept { return parts_ - 1; }
  // d-faces in lexicographic order, d = 0..dimension().
  const std::vector<Face>& faces(std::size_t d) const { return faces_.at(d); }
  std::size_t face_count(std::size_t d) const { return faces_.at(d).size(); }

 private:
  std::size_t set_size_;
  std::size_t parts_;
  std::vector<std::vector<Face>> faces_;
};

JoinComplex build_join_complex(std::size_t set_size, std::size_t parts);

// boundaries[d-1] is the boundary map from d-faces to (d-1)-faces for
// d = 1..dimension, rows indexed by d-faces, entries (-1)^i for dropping the
// i-th vertex. In row convention boundaries[d] * boundaries[d-1] == 0.
struct ChainComplex {
  std::vector<std::size_t> ranks;     // chain group ranks per degree
  std::vector<IntMatrix> boundaries;  // size ranks.size() - 1
};

ChainComplex boundary_matrices(const JoinComplex& complex);

// Reduced homology, one group per degree 0..dimension.
struct BettiTable {
  std::vector<FgAbelianGroup> reduced;

  const FgAbelianGroup& at(std::size_t d) const;  // trivial outside the range
};

BettiTable reduced_homology(const ChainComplex& chains);

struct KTheoryRanks {
  std::size_t k0_rank = 0;
  std::size_t k1_rank = 0;

  friend bool operator==(const KTheoryRanks&, const KTheoryRanks&) = default;
};

// One join with an N-point set: (rank K^0, rank K^1) = (l, r) becomes
// (r(N-1)+1, (l-1)(N-1)). Requires l >= 1, N >= 1.
KTheoryRanks join_step_formula(std::size_t l, std::size_t r, std::size_t set_size);
// Closed form for the k-fold join of an N-point set.
KTheoryRanks join_k_theory_formula(std::size_t set_size, std::size_t copies);

struct MayerVietorisDelta {
  IntMatrix delta0;         // (l + N) x (l N): (a, b) -> a (1 ... 1) - (1; ...; 1) b
  std::size_t kernel_rank;  // via kernel_basis
  FgAbelianGroup cokernel;  // via cokernel_invariants
};

MayerVietorisDelta mayer_vietoris_delta(std::size_t l, std::size_t set_size);
// r x (r N): a -> a (1 ... 1); the odd-degree map of the same sequence.
IntMatrix mayer_vietoris_delta1(std::size_t r, std::size_t set_size);
// The join step computed from the two exact-sequence maps instead of the
// closed form: K^0 = coker(delta1) + ker(delta0), K^1 = coker(delta0).
KTheoryRanks join_step_via_mayer_vietoris(std::size_t l, std::size_t r, std::size_t set_size);

struct OracleReport {
  KTheoryRanks formula;
  KTheoryRanks from_homology;
  BettiTable homology;
  bool torsion_free = true;
  bool consistent = false;
};

// Compares the closed-form ranks with 1 + sum of even reduced Betti numbers
// and the sum of odd ones.
OracleReport oracle_consistency(std::size_t set_size, std::size_t copies);

// True iff the table is the reduced homology of a sphere S^dim.
bool is_sphere_homology(const BettiTable& table, std::size_t dim);

std::string render_homology(const BettiTable& table);

}  // namespace equik
