#include <gtest/gtest.h>

#include "pcp/fixtures.hpp"
#include "pcp/lab.hpp"

namespace {

using namespace pcp;

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long n) { return Scalar::from_long(n, Q); }

TEST(Validate, TwoIdempotentsZ) {
  auto a = fixtures::two_idempotents_z(Q);
  EXPECT_TRUE(validate_action(a).ok());
}

TEST(Validate, SignFlippedMapIsNotMultiplicative) {
  // alpha_1(e0) = -e1 is a linear bijection but fails multiplicativity:
  // alpha(e0 e0) = alpha(e0) = -e1, while alpha(e0)^2 = e1
  auto a = fixtures::two_idempotents_z(Q);
  ExactMatrix m1(2, 2, Q);
  m1.at(1, 0) = q(-1);
  a.alpha.erase(1);
  a.alpha.emplace(1, m1);
  a.idem[1] = Vec{q(0), q(1)};
  auto rep = validate_action(a);
  EXPECT_FALSE(rep.ok());
  bool mult = false, unitmap = false;
  for (const auto& i : rep.issues) {
    if (i.check == "multiplicative") mult = true;
    if (i.check == "unit-map") unitmap = true;
  }
  EXPECT_TRUE(mult || unitmap) << rep.str();
}

TEST(Validate, TrivialActionOfFiniteGroup) {
  auto R = std::make_shared<StructureAlgebra>(matrix_algebra(Q, 2));
  EXPECT_TRUE(validate_action(fixtures::trivial_action(R, make_cyclic(4))).ok());
  EXPECT_TRUE(validate_action(fixtures::trivial_action(R, make_symmetric(3))).ok());
}

TEST(RestrictGlobal, C3ShiftFirstTwoCoordinates) {
  Restriction r = fixtures::c3_restriction(Q);
  EXPECT_TRUE(validate_action(r.action).ok());
  EXPECT_EQ(r.action.dim(), 2u);
  ASSERT_EQ(r.action.support.size(), 3u);
  // 1_g = 1_R beta_g(1_R) gives one-dimensional ideals off the identity
  EXPECT_EQ(r.action.ideal_of(0).dim(), 2u);
  EXPECT_EQ(r.action.ideal_of(1).dim(), 1u);
  EXPECT_EQ(r.action.ideal_of(2).dim(), 1u);
}

TEST(RestrictGlobal, FullIdempotentGivesGlobal) {
  GlobalAction b = fixtures::shift_global(Q, 3);
  Restriction r = restrict_global(b, b.T().unit);
  EXPECT_TRUE(validate_action(r.action).ok());
  for (GElem g : r.action.support) EXPECT_EQ(r.action.ideal_of(g).dim(), 3u);
}

TEST(RestrictGlobal, WindowShiftSupportedAtZero) {
  GlobalAction b = fixtures::window_shift_z(Q, 2);
  Vec e0 = zero_vec(5, Q);
  e0[2] = Scalar::one(Q);
  Restriction r = restrict_global(b, e0, 3);
  EXPECT_EQ(r.action.support, (std::vector<GElem>{0}));
  EXPECT_TRUE(validate_action(r.action).ok());
  // probing past the wrap sees a nonzero ideal at the boundary and refuses
  EXPECT_THROW(restrict_global(b, e0, 5), std::runtime_error);
}

TEST(RestrictGlobal, NonIdempotentRejected) {
  GlobalAction b = fixtures::shift_global(Q, 3);
  EXPECT_THROW(restrict_global(b, Vec{q(2), q(0), q(0)}), std::runtime_error);
}

TEST(RestrictGlobal, TwistedSwapIsValid) {
  GlobalAction b = fixtures::twisted_swap_c2(Q);
  EXPECT_TRUE(validate_global(b).ok());
  Restriction r = restrict_global(b, b.T().unit);
  EXPECT_TRUE(r.action.has_nontrivial_twist());
  EXPECT_TRUE(validate_action(r.action).ok());
}

TEST(RestrictGlobal, RandomInstancesAlwaysValid) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    TwistedPartialAction a = random_action(seed, 4, 4);
    EXPECT_TRUE(validate_action(a).ok()) << "seed " << seed;
    EXPECT_LE(a.dim(), 4u);
  }
}

TEST(ValidateGlobal, BrokenAutomorphismCaught) {
  GlobalAction b = fixtures::shift_global(Q, 3);
  ExactMatrix bad = b.beta.at(1);
  bad.at(0, 0) = q(2);  // no longer a permutation of idempotents
  b.beta.erase(1);
  b.beta.emplace(1, bad);
  EXPECT_FALSE(validate_global(b).ok());
}

TEST(RestrictSubgroup, TrivialSubgroup) {
  Restriction r = fixtures::c3_restriction(Q);
  TwistedPartialAction sub = restrict_subgroup(r.action, {0});
  EXPECT_EQ(sub.group.order(), 1u);
  EXPECT_EQ(sub.support, (std::vector<GElem>{0}));
  EXPECT_TRUE(validate_action(sub).ok());
}

TEST(RestrictSubgroup, WholeGroupIsIdentityTransform) {
  Restriction r = fixtures::c3_restriction(Q);
  TwistedPartialAction sub = restrict_subgroup(r.action, {0, 1, 2});
  EXPECT_EQ(sub.support.size(), r.action.support.size());
  for (GElem g : sub.support) {
    EXPECT_TRUE(vec_eq(sub.one(g), r.action.one(g)));
    EXPECT_EQ(sub.alpha.at(g), r.action.alpha.at(g));
  }
}

TEST(RestrictSubgroup, NotASubgroupRejected) {
  Restriction r = fixtures::c3_restriction(Q);
  EXPECT_THROW(restrict_subgroup(r.action, {0, 1}), std::runtime_error);
}

TEST(RestrictSubgroup, EvenIntegersOnTwoIdempotents) {
  auto a = fixtures::two_idempotents_z(Q);
  TwistedPartialAction sub = restrict_subgroup_z(a, 2);
  EXPECT_EQ(sub.support, (std::vector<GElem>{0}));
  EXPECT_TRUE(validate_action(sub).ok());
}

TEST(QuotientAction, ByZeroIsIsomorphic) {
  auto a = fixtures::two_idempotents_z(Q);
  QuotientAction qa = quotient_action(a, {});
  EXPECT_EQ(qa.action.dim(), a.dim());
  EXPECT_EQ(qa.action.support, a.support);
  EXPECT_TRUE(validate_action(qa.action).ok());
  for (GElem g : a.support) EXPECT_EQ(qa.action.alpha.at(g), a.alpha.at(g));
}

TEST(QuotientAction, ByWholeAlgebraIsZero) {
  auto a = fixtures::two_idempotents_z(Q);
  QuotientAction qa = quotient_action(a, {unit_vec(2, 0, Q), unit_vec(2, 1, Q)});
  EXPECT_EQ(qa.action.dim(), 0u);
  EXPECT_TRUE(validate_action(qa.action).ok());
}

TEST(QuotientAction, NonInvariantIdealRejected) {
  auto a = fixtures::two_idempotents_z(Q);
  // I = K e0: alpha_1(e0) = e1 escapes I
  try {
    quotient_action(a, {unit_vec(2, 0, Q)});
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("not invariant"), std::string::npos);
  }
}

TEST(FixedRing, TrivialActionFixesEverything) {
  auto R = std::make_shared<StructureAlgebra>(product_of_fields(Q, 3));
  auto a = fixtures::trivial_action(R, make_cyclic(3));
  EXPECT_EQ(fixed_ring(a).size(), 3u);
}

TEST(FixedRing, TwoIdempotentsDiagonal) {
  auto a = fixtures::two_idempotents_z(Q);
  auto fr = fixed_ring(a);
  ASSERT_EQ(fr.size(), 1u);
  EXPECT_TRUE(vec_eq(fr[0], Vec{q(1), q(1)}));
}

TEST(FixedRing, GlobalSwapDiagonal) {
  GlobalAction b = fixtures::shift_global(Q, 2);
  Restriction r = restrict_global(b, b.T().unit);
  auto fr = fixed_ring(r.action);
  ASSERT_EQ(fr.size(), 1u);
  EXPECT_TRUE(vec_eq(fr[0], Vec{q(1), q(1)}));
  EXPECT_TRUE(contains(span_of(fr, 2, Q), r.action.R().unit));
}

TEST(FiniteType, FiniteGroupsAlways) {
  auto R = std::make_shared<StructureAlgebra>(dual_numbers(Q));
  auto a = fixtures::trivial_action(R, make_cyclic(5));
  auto ft = is_finite_type(a);
  EXPECT_TRUE(ft.finite_type);
  EXPECT_EQ(ft.witness_set.size(), 5u);
}

TEST(FiniteType, PropertyOverRandomFiniteInstances) {
  for (uint64_t seed = 200; seed < 230; ++seed) {
    TwistedPartialAction a = random_action(seed, 4, 4);
    EXPECT_TRUE(is_finite_type(a).finite_type) << "seed " << seed;
  }
}

TEST(FiniteType, TwoIdempotentsRefuted) {
  auto ft = is_finite_type(fixtures::two_idempotents_z(Q));
  EXPECT_FALSE(ft.finite_type);
  ASSERT_TRUE(ft.refuting_translate);
  EXPECT_EQ(*ft.refuting_translate, 3);  // support {-1,0,1}: translate past it
}

TEST(FiniteType, LoneFiberRefuted) {
  auto ft = is_finite_type(fixtures::lone_fiber_z(Q));
  EXPECT_FALSE(ft.finite_type);
  ASSERT_TRUE(ft.refuting_translate);
}

TEST(GlobalAsPartial, RoundTrip) {
  GlobalAction b = fixtures::twisted_swap_c2(Q);
  TwistedPartialAction a = global_as_partial(b);
  EXPECT_TRUE(validate_action(a).ok());
  EXPECT_TRUE(a.has_nontrivial_twist());
}

}  // namespace
