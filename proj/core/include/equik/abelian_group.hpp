#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "equik/int_matrix.hpp"

namespace equik {

// Z^free_rank + Z_{d1} + ... + Z_{dk} with 1 < d1 | d2 | ... | dk. Two
// groups are isomorphic iff their fields are equal.
struct FgAbelianGroup {
  std::size_t free_rank = 0;
  IntVector torsion;

  static FgAbelianGroup free(std::size_t rank) { return {rank, {}}; }
  static FgAbelianGroup cyclic(const Integer& order);
  // Canonical form of Z^free + (+) Z_{orders[i]}; orders of 0 count as Z and
  // orders of 1 are dropped.
  static FgAbelianGroup from_cyclic_factors(std::size_t free, const IntVector& orders);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_torsion_free() const { return torsion.empty(); }
  // Product of the torsion invariants (1 for torsion-free groups).
  Integer torsion_order() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

struct Presentation {
  std::size_t generators = 0;
  IntMatrix relations;  // rows are relations, cols = generators
};

FgAbelianGroup normalize(const Presentation& p);
FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

// A canonical presentation (diagonal relations) of the group.
Presentation presentation_of(const FgAbelianGroup& g);

// "0", "Z", "Z^3 ⊕ Z_2 ⊕ Z_12", ...
std::string render(const FgAbelianGroup& g);
// Accepts the rendering above; "+" may be used in place of "⊕".
FgAbelianGroup parse_group(std::string_view text);

}  // namespace equik
