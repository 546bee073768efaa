#include <gtest/gtest.h>

#include "pcp/fixtures.hpp"
#include "pcp/lab.hpp"

namespace {

using namespace pcp;

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long n) { return Scalar::from_long(n, Q); }

CrossedElement elem(const TwistedPartialAction& a, GElem g, const Vec& v) {
  return CrossedElement::term(a, g, v);
}

TEST(CrossMultiply, UnitLaw) {
  auto a = fixtures::two_idempotents_z(Q);
  CrossedElement one = cross_unit(a);
  CrossedElement x = cross_add(elem(a, 1, Vec{q(0), q(3)}), elem(a, 0, Vec{q(2), q(-1)}));
  EXPECT_TRUE(cross_multiply(a, one, x) == x);
  EXPECT_TRUE(cross_multiply(a, x, one) == x);
}

TEST(CrossMultiply, RuleOnTwoIdempotents) {
  auto a = fixtures::two_idempotents_z(Q);
  // (e1 d_1)(e0 d_{-1}) = alpha_1(alpha_{-1}(e1) e0) d_0 = e1 d_0
  CrossedElement x = elem(a, 1, Vec{q(0), q(1)});
  CrossedElement y = elem(a, -1, Vec{q(1), q(0)});
  CrossedElement p = cross_multiply(a, x, y);
  EXPECT_TRUE(p == elem(a, 0, Vec{q(0), q(1)}));
  // (e1 d_1)(e1 d_1) = 0: the product would land in D_2 = 0
  EXPECT_TRUE(cross_multiply(a, x, x).is_zero());
}

TEST(CrossMultiply, CoefficientOutsideIdealRejected) {
  auto a = fixtures::two_idempotents_z(Q);
  EXPECT_THROW(elem(a, 1, Vec{q(1), q(1)}), std::runtime_error);  // not in K e1
}

TEST(CrossMultiply, AssociativeOnSeededTriples) {
  auto a = fixtures::two_idempotents_z(Q);
  Rng rng(99);
  auto random_elem = [&] {
    CrossedElement x;
    for (GElem g : a.support) {
      Vec v = a.R().mul(Vec{q(rng.range(-3, 3)), q(rng.range(-3, 3))}, a.one(g));
      x = cross_add(x, elem(a, g, v));
    }
    return x;
  };
  for (int t = 0; t < 1000; ++t) {
    CrossedElement x = random_elem(), y = random_elem(), z = random_elem();
    CrossedElement lhs = cross_multiply(a, cross_multiply(a, x, y), z);
    CrossedElement rhs = cross_multiply(a, x, cross_multiply(a, y, z));
    ASSERT_TRUE(lhs == rhs) << "trial " << t;
  }
}

TEST(BuildCrossed, TwoIdempotentsIsFourDimensionalSimple) {
  auto a = fixtures::two_idempotents_z(Q);
  CrossedProduct cp = build_crossed(a);
  EXPECT_EQ(cp.dim(), 4u);
  EXPECT_TRUE(validate_algebra(cp.algebra).ok());
  EXPECT_TRUE(jacobson_radical(cp.algebra).empty());
  EXPECT_EQ(center(cp.algebra).size(), 1u);
}

TEST(BuildCrossed, LoneFiberGivesBackR) {
  auto a = fixtures::lone_fiber_z(Q);
  CrossedProduct cp = build_crossed(a);
  EXPECT_EQ(cp.dim(), 1u);
  EXPECT_TRUE(vec_eq(cp.algebra.basis_product(0, 0), a.R().basis_product(0, 0)));
  EXPECT_TRUE(vec_eq(cp.algebra.unit, a.R().unit));
}

TEST(BuildCrossed, DimensionIsSumOfIdealDims) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    TwistedPartialAction a = random_action(seed, 4, 4);
    CrossedProduct cp = build_crossed(a);
    size_t expect = 0;
    for (GElem g : a.support) expect += a.ideal_of(g).dim();
    EXPECT_EQ(cp.dim(), expect) << "seed " << seed;
  }
}

TEST(BuildCrossed, GlobalTrivialTwistIsGroupAlgebra) {
  for (size_t n : {2u, 3u, 4u}) {
    auto R = std::make_shared<StructureAlgebra>(field_algebra(Q));
    auto a = fixtures::trivial_action(R, make_cyclic(n));
    CrossedProduct cp = build_crossed(a);
    StructureAlgebra ga = group_algebra(Q, make_cyclic(n));
    ASSERT_EQ(cp.dim(), ga.dim);
    for (size_t i = 0; i < ga.dim; ++i)
      for (size_t j = 0; j < ga.dim; ++j)
        EXPECT_TRUE(vec_eq(cp.algebra.basis_product(i, j), ga.basis_product(i, j)));
  }
}

TEST(BuildCrossed, TwistedGroupAlgebraRelation) {
  // trivial C2 action on K with cocycle u_{g,g} = -1: the crossed product is
  // K[x]/(x^2 + 1), so d_g d_g = -d_e; over Q it is a field (radical 0,
  // commutative), unlike the untwisted K[C2] = K x K
  auto T = std::make_shared<StructureAlgebra>(field_algebra(Q));
  GlobalAction b;
  b.algebra = T;
  b.group = make_cyclic(2);
  b.beta.emplace(0, ExactMatrix::identity(1, Q));
  b.beta.emplace(1, ExactMatrix::identity(1, Q));
  b.twist[{1, 1}] = Vec{q(-1)};
  ASSERT_TRUE(validate_global(b).ok());
  TwistedPartialAction a = global_as_partial(b);
  ASSERT_TRUE(validate_action(a).ok());
  CrossedProduct cp = build_crossed(a);
  ASSERT_EQ(cp.dim(), 2u);
  EXPECT_TRUE(vec_eq(cp.algebra.basis_product(1, 1), vec_scale(q(-1), cp.algebra.unit)));
  EXPECT_TRUE(jacobson_radical(cp.algebra).empty());
  EXPECT_EQ(center(cp.algebra).size(), 2u);
  // the untwisted counterpart has the split relation d_g d_g = +d_e
  CrossedProduct untwisted = build_crossed(
      fixtures::trivial_action(std::make_shared<StructureAlgebra>(field_algebra(Q)),
                               make_cyclic(2)));
  EXPECT_TRUE(vec_eq(untwisted.algebra.basis_product(1, 1), untwisted.algebra.unit));
}

TEST(BuildCrossed, UnitIsIdentityAtE) {
  auto a = fixtures::two_idempotents_z(Q);
  CrossedProduct cp = build_crossed(a);
  CrossedElement one = cp.element_of(cp.algebra.unit);
  EXPECT_TRUE(one == cross_unit(a));
}

TEST(SubgroupProjection, WholeGroupAndTrivial) {
  auto a = fixtures::two_idempotents_z(Q);
  CrossedElement x = cross_add(elem(a, 1, Vec{q(0), q(1)}), elem(a, 0, Vec{q(1), q(0)}));
  auto [h_all, a_all] = subgroup_projection_z(a, x, 1);
  EXPECT_TRUE(h_all == x);
  EXPECT_TRUE(a_all.is_zero());
  auto [h_triv, a_triv] = subgroup_projection_z(a, x, 1000000);
  EXPECT_TRUE(h_triv == elem(a, 0, Vec{q(1), q(0)}));
  EXPECT_TRUE(a_triv == elem(a, 1, Vec{q(0), q(1)}));
  auto [h0, a0] = subgroup_projection_z(a, CrossedElement::zero(), 2);
  EXPECT_TRUE(h0.is_zero() && a0.is_zero());
}

TEST(SubgroupProjection, PartsSumBack) {
  Restriction r = fixtures::c3_restriction(Q);
  CrossedProduct cp = build_crossed(r.action);
  CrossedElement x = cp.element_of(Vec{q(1), q(2), q(3), q(4)});
  auto [h, rest] = subgroup_projection(r.action, x, {0});
  EXPECT_TRUE(cross_add(h, rest) == x);
}

TEST(Maschke, TrivialGroupGivesPiBack) {
  auto R = std::make_shared<StructureAlgebra>(product_of_fields(Q, 2));
  auto a = fixtures::trivial_action(R, make_cyclic(1));
  CrossedProduct cp = build_crossed(a);
  ModuleRep rep = regular_representation(cp);
  // pi = right multiplication by e0: an R-linear projection onto (R*G)e0
  Vec eps = cp.coords_of(CrossedElement::term(a, 0, Vec{q(1), q(0)}));
  ExactMatrix pi = cp.algebra.right_mult(eps);
  MaschkeResult res = maschke_average(a, rep, pi);
  EXPECT_TRUE(res.checks.ok()) << res.checks.str();
  EXPECT_EQ(res.psi, pi);
}

TEST(Maschke, SwapActionOnRegularModule) {
  GlobalAction b = fixtures::shift_global(Q, 2);
  Restriction r = restrict_global(b, b.T().unit);
  CrossedProduct cp = build_crossed(r.action);
  ModuleRep rep = regular_representation(cp);
  // equivariant pi: right multiplication by an idempotent
  Vec eps = cp.coords_of(CrossedElement::term(r.action, 0, Vec{q(1), q(0)}));
  ExactMatrix pi = cp.algebra.right_mult(eps);
  MaschkeResult res = maschke_average(r.action, rep, pi);
  EXPECT_TRUE(res.checks.ok()) << res.checks.str();
  // averaging an equivariant projection fixes its values on N
  std::vector<Vec> ngens;
  for (size_t j = 0; j < cp.dim(); ++j) ngens.push_back(pi.col(j));
  Subspace N = span_of(ngens, cp.dim(), Q);
  for (const auto& v : N.basis) EXPECT_TRUE(vec_eq(res.psi.apply(v), pi.apply(v)));
}

TEST(Maschke, RandomizedProjectionsOnSwap) {
  GlobalAction b = fixtures::shift_global(Q, 2);
  Restriction r = restrict_global(b, b.T().unit);
  CrossedProduct cp = build_crossed(r.action);
  ModuleRep rep = regular_representation(cp);
  Rng rng(5);
  Vec eps = cp.coords_of(CrossedElement::term(r.action, 0, Vec{q(1), q(0)}));
  std::vector<Vec> ngens;
  ExactMatrix reps = cp.algebra.right_mult(eps);
  for (size_t j = 0; j < cp.dim(); ++j) ngens.push_back(reps.col(j));
  Subspace N = span_of(ngens, cp.dim(), Q);
  for (int t = 0; t < 5; ++t) {
    auto pi = labdetail::random_r_linear_projection(cp, rep, N, rng);
    ASSERT_TRUE(pi);
    MaschkeResult res = maschke_average(r.action, rep, *pi);
    EXPECT_TRUE(res.checks.ok()) << res.checks.str();
  }
}

TEST(Maschke, NonInvertibleOrderRejected) {
  FieldSpec f2 = FieldSpec::prime_field(2);
  auto R = std::make_shared<StructureAlgebra>(field_algebra(f2));
  auto a = fixtures::trivial_action(R, make_cyclic(2));
  CrossedProduct cp = build_crossed(a);
  ModuleRep rep = regular_representation(cp);
  EXPECT_THROW(maschke_average(a, rep, ExactMatrix::identity(2, f2)), std::runtime_error);
}

TEST(QuotientIso, TrivialActionWithInvariantLine) {
  auto R = std::make_shared<StructureAlgebra>(product_of_fields(Q, 2));
  auto a = fixtures::trivial_action(R, make_cyclic(2));
  EXPECT_EQ(quotient_iso_check(a, {unit_vec(2, 0, Q)}), "");
}

TEST(QuotientIso, SwapActionRadicalOfDuals) {
  // two dual-number blocks swapped by C2; J(R) is invariant
  auto dn = dual_numbers(Q);
  auto T = std::make_shared<StructureAlgebra>(direct_sum(dn, dn));
  GlobalAction b;
  b.algebra = T;
  b.group = make_cyclic(2);
  b.beta.emplace(0, ExactMatrix::identity(4, Q));
  ExactMatrix sw(4, 4, Q);
  for (size_t k = 0; k < 2; ++k) {
    sw.at(2 + k, k) = Scalar::one(Q);
    sw.at(k, 2 + k) = Scalar::one(Q);
  }
  b.beta.emplace(1, std::move(sw));
  ASSERT_TRUE(validate_global(b).ok());
  Restriction r = restrict_global(b, T->unit);
  auto rad = jacobson_radical(r.action.R());
  ASSERT_EQ(rad.size(), 2u);
  EXPECT_EQ(quotient_iso_check(r.action, rad), "");
}

}  // namespace
