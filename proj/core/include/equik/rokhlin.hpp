#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "equik/abelian_group.hpp"

namespace equik {

// Upper bounds may be infinite; nullopt stands for infinity.
using UpperBound = std::optional<std::size_t>;

struct DimBound;

struct NoCertificate {};

// I^power . M != 0 for the model M, recomputed from descriptors.
struct AnnihilatorWitness {
  struct Stability {
    Integer multiplier;  // connecting maps multiply by this
    IntVector element;   // generator coordinates of x
  };

  std::string ring;                   // ring tag of the model's ring
  std::size_t power = 0;
  std::string model;                  // KModelDescriptor text
  std::string ideal = "augmentation"; // or "factor:<i>"
  FgAbelianGroup nonzero_group;
  std::optional<Stability> stability;
};

// The action has the X-Rokhlin property for X the `copies`-fold join.
struct JoinFactorWitness {
  std::size_t copies = 0;
};

// Commutative case: dimension is the G-index minus one.
struct IndexWitness {
  std::string group;
  std::size_t index = 0;
};

enum class TensorRule { sum, min, absorb };

struct RuleApplication {
  TensorRule rule = TensorRule::sum;
  std::vector<DimBound> inputs;
};

using Certificate =
    std::variant<NoCertificate, AnnihilatorWitness, JoinFactorWitness, IndexWitness, RuleApplication>;

struct DimBound {
  std::size_t lower = 0;
  UpperBound upper;
  Certificate lower_certificate;
  Certificate upper_certificate;
};

std::string_view rule_name(TensorRule rule);
TensorRule parse_rule(std::string_view name);
std::string render_upper(const UpperBound& upper);

// {0, 0}: the Rokhlin property, witnessed by the 1-fold join.
DimBound rokhlin_bound();

// m <= dim <= 2m+2 for the Z_2 AF construction.
DimBound z2_af_bounds(std::size_t m);
// dim = d for the circle AH construction.
DimBound circle_ah_dimension(std::size_t d);
// m <= dim <= 2m+2 for Z_2 x G, G of odd order.
DimBound product_z2_bounds(std::size_t m, std::string_view group_tag);
// dim = d for S^1 x G.
DimBound circle_product_dimension(std::size_t d, std::string_view group_tag);
// Z_p x G with p coprime to |G|: lower bound m from I(Z_p)^m / I(Z_p)^{m+1},
// no effective upper bound.
DimBound cyclic_product_lower_bound(std::size_t p, std::size_t m, std::string_view group_tag);

// Combines upper bounds; the result's lower bound is always 0.
DimBound tensor_rule(TensorRule rule, const DimBound& b1, const DimBound& b2);

struct Z6CollapseReport {
  std::size_t d = 0;
  DimBound factor1;  // Z_2 x Z_3, Z_2 part carries the dimension
  DimBound factor2;  // Z_3 x Z_2, Z_3 part carries the dimension
  DimBound product;  // diagonal Z_6 action on the tensor product
  bool factors_exceed_d = false;
  bool product_is_rokhlin = false;
};

Z6CollapseReport z6_collapse_report(std::size_t d);

struct CommutativeDimension {
  std::size_t dim = 0;
  std::size_t ind = 0;
  DimBound bound;
  // For Z_2 (small k): the join complex has the homology of S^{k-1}.
  std::optional<bool> sphere_check;
};

// Y = G^{*k} for G in {z2, s1, z<n>}.
CommutativeDimension commutative_dimension(std::string_view group_tag, std::size_t copies);

struct ExistenceOnly {
  std::string group;
  std::size_t n = 0;
  std::string note;
};

using FiniteAfOutcome = std::variant<DimBound, ExistenceOnly>;

// n < dim < infinity for a finite group G. Concrete for Z_2; otherwise only
// the existence statement is available.
FiniteAfOutcome finite_af_bounds(std::string_view group_tag, std::size_t n);

// Recomputes every embedded certificate.
bool validate(const DimBound& bound);
bool validate(const Z6CollapseReport& report);

}  // namespace equik
