#include <gtest/gtest.h>

#include "equik/error.hpp"
#include "equik/ideal_lattice.hpp"
#include "equik/report.hpp"
#include "equik/rokhlin.hpp"

namespace equik {
namespace {

const AnnihilatorWitness& lower_witness(const DimBound& b) { return std::get<AnnihilatorWitness>(b.lower_certificate); }

DimBound plain(std::size_t lower, UpperBound upper) { return {lower, upper, NoCertificate{}, NoCertificate{}}; }

TEST(Z2Bounds, IntervalAndWitness) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const DimBound b = z2_af_bounds(m);
    EXPECT_EQ(b.lower, m);
    EXPECT_EQ(b.upper, UpperBound{2 * m + 2});
    EXPECT_EQ(lower_witness(b).nonzero_group, FgAbelianGroup::cyclic(2));
    EXPECT_EQ(std::get<JoinFactorWitness>(b.upper_certificate).copies, 2 * m + 3);
    EXPECT_TRUE(validate(b)) << m;
  }
  EXPECT_THROW(z2_af_bounds(0), InvalidArgument);
}

TEST(Z2Bounds, WitnessMatchesFiltrationQuotient) {
  const RingRef z2 = cyclic_ring(2);
  EXPECT_EQ(lower_witness(z2_af_bounds(5)).nonzero_group, lattice_quotient(ideal_power(z2, 5), ideal_power(z2, 6)));
}

TEST(CircleBounds, ExactDimension) {
  for (std::size_t d = 0; d <= 8; ++d) {
    const DimBound b = circle_ah_dimension(d);
    EXPECT_EQ(b.lower, d);
    EXPECT_EQ(b.upper, UpperBound{d});
    const auto& w = lower_witness(b);
    ASSERT_TRUE(w.stability.has_value());
    EXPECT_EQ(w.stability->multiplier, 2);
    EXPECT_EQ(w.stability->element[0], 1);
    EXPECT_TRUE(validate(b)) << d;
  }
}

TEST(ProductBounds, OddOrderPartners) {
  const DimBound b = product_z2_bounds(2, "z3");
  EXPECT_EQ(b.lower, 2u);
  EXPECT_EQ(b.upper, UpperBound{6});
  EXPECT_EQ(lower_witness(b).nonzero_group, FgAbelianGroup::cyclic(2));
  EXPECT_EQ(lower_witness(b).stability->multiplier, 3);
  EXPECT_TRUE(validate(b));

  const DimBound c = product_z2_bounds(1, "z5");
  EXPECT_EQ(c.lower, 1u);
  EXPECT_EQ(c.upper, UpperBound{4});
  EXPECT_TRUE(validate(c));

  try {
    product_z2_bounds(1, "z2");
    FAIL() << "even order accepted";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("even order"), std::string::npos);
  }
  EXPECT_THROW(product_z2_bounds(1, "s3"), InvalidArgument);
}

TEST(CircleProduct, ExactDimension) {
  EXPECT_EQ(circle_product_dimension(2, "z3").lower, 2u);
  EXPECT_EQ(circle_product_dimension(2, "z3").upper, UpperBound{2});
  EXPECT_EQ(circle_product_dimension(0, "s3").upper, UpperBound{0});
  const DimBound b = circle_product_dimension(4, "z5");
  EXPECT_GE(lower_witness(b).nonzero_group.free_rank, 1u);
  EXPECT_TRUE(validate(b));
}

TEST(CyclicProduct, FiltrationWitness) {
  const DimBound b = cyclic_product_lower_bound(3, 2, "z2");
  EXPECT_EQ(b.lower, 2u);
  EXPECT_FALSE(b.upper.has_value());
  EXPECT_EQ(lower_witness(b).nonzero_group, FgAbelianGroup::cyclic(3));
  EXPECT_TRUE(validate(b));
  EXPECT_THROW(cyclic_product_lower_bound(3, 1, "z3"), InvalidArgument);
}

TEST(TensorRule, Examples) {
  EXPECT_EQ(tensor_rule(TensorRule::sum, plain(1, 4), plain(2, 6)).upper, UpperBound{10});
  EXPECT_EQ(tensor_rule(TensorRule::min, plain(3, 5), plain(0, 0)).upper, UpperBound{0});
  EXPECT_EQ(tensor_rule(TensorRule::sum, plain(0, std::nullopt), plain(0, 3)).upper, std::nullopt);
  EXPECT_EQ(tensor_rule(TensorRule::min, plain(0, std::nullopt), plain(0, 3)).upper, UpperBound{3});
  EXPECT_EQ(tensor_rule(TensorRule::absorb, plain(1, 4), rokhlin_bound()).upper, UpperBound{4});
  EXPECT_THROW(tensor_rule(TensorRule::absorb, plain(1, 4), plain(0, 2)), InvalidArgument);
  EXPECT_EQ(tensor_rule(TensorRule::sum, z2_af_bounds(2), z2_af_bounds(1)).lower, 0u);
}

TEST(TensorRule, PropertyUnitLaws) {
  std::vector<DimBound> bounds{rokhlin_bound(), plain(0, std::nullopt)};
  for (std::size_t m = 1; m <= 3; ++m) bounds.push_back(z2_af_bounds(m));
  for (std::size_t d = 0; d <= 3; ++d) bounds.push_back(circle_ah_dimension(d));
  for (const auto& b : bounds) {
    EXPECT_EQ(tensor_rule(TensorRule::min, b, b).upper, b.upper);
    EXPECT_EQ(tensor_rule(TensorRule::sum, b, rokhlin_bound()).upper, b.upper);
    EXPECT_EQ(tensor_rule(TensorRule::absorb, b, rokhlin_bound()).upper, b.upper);
    for (const auto& c : bounds) {
      EXPECT_EQ(tensor_rule(TensorRule::sum, b, c).upper, tensor_rule(TensorRule::sum, c, b).upper);
      EXPECT_EQ(tensor_rule(TensorRule::min, b, c).upper, tensor_rule(TensorRule::min, c, b).upper);
    }
  }
}

TEST(Z6Collapse, NonMonotone) {
  for (std::size_t d = 1; d <= 3; ++d) {
    const Z6CollapseReport r = z6_collapse_report(d);
    EXPECT_GT(r.factor1.lower, d);
    EXPECT_GT(r.factor2.lower, d);
    EXPECT_EQ(r.product.lower, 0u);
    EXPECT_EQ(r.product.upper, UpperBound{0});
    EXPECT_TRUE(r.factors_exceed_d && r.product_is_rokhlin);
    EXPECT_TRUE(validate(r));
  }
  EXPECT_THROW(z6_collapse_report(0), InvalidArgument);
}

TEST(Commutative, DimensionIsIndexMinusOne) {
  for (const char* g : {"z2", "z3", "s1", "z7"}) {
    for (std::size_t k = 1; k <= 6; ++k) {
      const CommutativeDimension c = commutative_dimension(g, k);
      EXPECT_EQ(c.dim, k - 1);
      EXPECT_EQ(c.ind, k);
      EXPECT_EQ(c.dim + 1, c.ind);
      EXPECT_TRUE(validate(c.bound));
      if (std::string(g) == "z2") {
        ASSERT_TRUE(c.sphere_check.has_value());
        EXPECT_TRUE(*c.sphere_check);
      }
    }
  }
  EXPECT_EQ(commutative_dimension("s1", 1).dim, 0u);
  EXPECT_THROW(commutative_dimension("s3", 2), Unsupported);
  EXPECT_THROW(commutative_dimension("z1", 2), Unsupported);
}

TEST(FiniteAf, DelegationAndExistence) {
  const FiniteAfOutcome z2 = finite_af_bounds("z2", 2);
  ASSERT_TRUE(std::holds_alternative<DimBound>(z2));
  EXPECT_GT(std::get<DimBound>(z2).lower, 2u);
  EXPECT_TRUE(validate(std::get<DimBound>(z2)));
  EXPECT_TRUE(std::holds_alternative<ExistenceOnly>(finite_af_bounds("s3", 1)));
  EXPECT_TRUE(std::holds_alternative<ExistenceOnly>(finite_af_bounds("z3", 1)));
}

TEST(Validate, VacuousAndForged) {
  EXPECT_TRUE(validate(plain(0, std::nullopt)));
  EXPECT_FALSE(validate(plain(1, std::nullopt)));
  EXPECT_FALSE(validate(plain(0, 3)));

  // Lower bound 5 claimed on R(Z_2)/I^3: the fifth power kills it.
  DimBound forged = z2_af_bounds(2);
  forged.lower = 5;
  std::get<AnnihilatorWitness>(forged.lower_certificate).power = 5;
  forged.upper = 6;
  EXPECT_FALSE(validate(forged));

  DimBound wrong_group = z2_af_bounds(2);
  std::get<AnnihilatorWitness>(wrong_group.lower_certificate).nonzero_group = FgAbelianGroup::cyclic(4);
  EXPECT_FALSE(validate(wrong_group));

  DimBound wrong_join = z2_af_bounds(2);
  std::get<JoinFactorWitness>(wrong_join.upper_certificate).copies = 5;
  EXPECT_FALSE(validate(wrong_join));

  DimBound inverted = circle_ah_dimension(3);
  inverted.upper = 2;
  EXPECT_FALSE(validate(inverted));

  // Stability fails: the Z_2 witness dies under multiplication by 2.
  DimBound unstable = product_z2_bounds(1, "z3");
  std::get<AnnihilatorWitness>(unstable.lower_certificate).stability->multiplier = 2;
  EXPECT_FALSE(validate(unstable));

  DimBound bad_rule = tensor_rule(TensorRule::sum, z2_af_bounds(1), z2_af_bounds(2));
  bad_rule.upper = 9;
  EXPECT_FALSE(validate(bad_rule));
}

TEST(Reports, JsonRoundTripValidates) {
  using nlohmann::json;
  std::vector<json> reports{
      bound_report("z2-af", {{"m", 3}}, z2_af_bounds(3), {"annihilation-lower-bound"}),
      bound_report("circle-ah", {{"d", 2}}, circle_ah_dimension(2), {"join-upper-bound"}),
      bound_report("product-z2", {{"m", 2}}, product_z2_bounds(2, "z3"), {"kunneth-tensor-piece"}),
      bound_report("tensor-rule", {}, tensor_rule(TensorRule::min, plain(0, std::nullopt), rokhlin_bound()),
                   {"tensor-min-rule"}),
      z6_report_to_json(z6_collapse_report(2)),
      commutative_report("z2", 3, commutative_dimension("z2", 3)),
      finite_report("s3", 1, finite_af_bounds("s3", 1)),
      finite_report("z2", 1, finite_af_bounds("z2", 1)),
  };
  for (const auto& r : reports) {
    const json reparsed = json::parse(r.dump());
    EXPECT_TRUE(validate_report(reparsed)) << r.dump();
  }
  EXPECT_EQ(bound_to_json(bound_from_json(bound_to_json(product_z2_bounds(2, "z5")))),
            bound_to_json(product_z2_bounds(2, "z5")));

  json forged = reports[0];
  forged["lower"] = 7;
  EXPECT_FALSE(validate_report(forged));
  json forged_z6 = reports[4];
  forged_z6["product"]["upper"] = 1;
  EXPECT_FALSE(validate_report(forged_z6));
  json forged_comm = reports[5];
  forged_comm["dim"] = 3;
  EXPECT_FALSE(validate_report(forged_comm));
  EXPECT_FALSE(validate_report(json::parse(R"({"construction": "z2-af"})")));
  EXPECT_FALSE(validate_report(json::parse("[1, 2]")));
}

}  // namespace
}  // namespace equik
