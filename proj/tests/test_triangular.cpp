#include <gtest/gtest.h>

#include "pcp/fixtures.hpp"
#include "pcp/lab.hpp"

namespace {

using namespace pcp;

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long n) { return Scalar::from_long(n, Q); }

Bimodule one_dim_bimodule() {
  auto K = std::make_shared<StructureAlgebra>(field_algebra(Q));
  Bimodule bm;
  bm.left_algebra = K;
  bm.right_algebra = K;
  bm.dim = 1;
  bm.left_act.push_back(ExactMatrix::identity(1, Q));
  bm.right_act.push_back(ExactMatrix::identity(1, Q));
  return bm;
}

TriangularAlgebra kkk() { return assemble_triangular(one_dim_bimodule()); }

TwistedPartialAction sign_action(const TriangularAlgebra& L) {
  TwistedPartialAction act;
  act.algebra = L.algebra;
  act.group = make_cyclic(2);
  act.support = {0, 1};
  act.idem[0] = L.algebra->unit;
  act.idem[1] = L.algebra->unit;
  act.alpha.emplace(0, ExactMatrix::identity(3, Q));
  ExactMatrix neg = ExactMatrix::identity(3, Q);
  neg.at(1, 1) = q(-1);
  act.alpha.emplace(1, std::move(neg));
  return act;
}

TEST(Assemble, KKKMatchesUpperTriangular) {
  TriangularAlgebra L = kkk();
  StructureAlgebra ut = upper_triangular2(Q);
  ASSERT_EQ(L.algebra->dim, 3u);
  EXPECT_TRUE(validate_algebra(*L.algebra).ok());
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      EXPECT_TRUE(vec_eq(L.algebra->basis_product(i, j), ut.basis_product(i, j)));
  // corner idempotents present
  Vec e_r = L.embed(Vec{q(1)}, Vec{}, zero_vec(1, Q));
  Vec e_s = L.embed(zero_vec(1, Q), Vec{}, Vec{q(1)});
  e_r = L.embed(Vec{q(1)}, zero_vec(1, Q), zero_vec(1, Q));
  e_s = L.embed(zero_vec(1, Q), zero_vec(1, Q), Vec{q(1)});
  EXPECT_TRUE(L.algebra->is_idempotent(e_r));
  EXPECT_TRUE(L.algebra->is_idempotent(e_s));
}

TEST(Assemble, ZeroBimoduleGivesProduct) {
  auto K = std::make_shared<StructureAlgebra>(field_algebra(Q));
  Bimodule bm;
  bm.left_algebra = K;
  bm.right_algebra = K;
  bm.dim = 0;
  bm.left_act.push_back(ExactMatrix(0, 0, Q));
  bm.right_act.push_back(ExactMatrix(0, 0, Q));
  TriangularAlgebra L = assemble_triangular(bm);
  EXPECT_EQ(L.algebra->dim, 2u);
  EXPECT_EQ(center(*L.algebra).size(), 2u);  // K x K is commutative
  EXPECT_TRUE(is_semisimple(*L.algebra));
}

TEST(Assemble, RegularBimoduleTriplesDimension) {
  auto R = std::make_shared<StructureAlgebra>(product_of_fields(Q, 2));
  TriangularAlgebra L = assemble_triangular(regular_bimodule(R));
  EXPECT_EQ(L.algebra->dim, 3 * R->dim);
  EXPECT_TRUE(validate_algebra(*L.algebra).ok());
}

TEST(Assemble, BrokenBimoduleRejected) {
  Bimodule bm = one_dim_bimodule();
  bm.left_act[0] = bm.left_act[0].scaled(q(2));  // 1_R no longer acts as identity
  EXPECT_THROW(assemble_triangular(bm), std::runtime_error);
}

TEST(Assemble, TensorBimoduleValid) {
  auto R = std::make_shared<StructureAlgebra>(matrix_algebra(Q, 2));
  auto S = std::make_shared<StructureAlgebra>(field_algebra(Q));
  Bimodule bm = tensor_bimodule(R, S);
  EXPECT_TRUE(validate_bimodule(bm).ok());
  TriangularAlgebra L = assemble_triangular(bm);
  EXPECT_TRUE(validate_algebra(*L.algebra).ok());
}

TEST(DecomposeIdeal, RadicalIsMiddleCorner) {
  TriangularAlgebra L = kkk();
  auto rad = jacobson_radical(*L.algebra);
  ASSERT_EQ(rad.size(), 1u);
  IdealDecomposition dec = decompose_ideal(L, rad);
  EXPECT_EQ(dec.j1.dim(), 0u);
  EXPECT_EQ(dec.n2.dim(), 1u);
  EXPECT_EQ(dec.j3.dim(), 0u);
  EXPECT_FALSE(dec.idem_r);  // the radical has no idempotent generator
}

TEST(DecomposeIdeal, WholeAlgebra) {
  TriangularAlgebra L = kkk();
  std::vector<Vec> whole;
  for (size_t i = 0; i < 3; ++i) whole.push_back(unit_vec(3, i, Q));
  IdealDecomposition dec = decompose_ideal(L, whole);
  EXPECT_EQ(dec.j1.dim(), 1u);
  EXPECT_EQ(dec.n2.dim(), 1u);
  EXPECT_EQ(dec.j3.dim(), 1u);
  ASSERT_TRUE(dec.idem_r && dec.idem_s);
  EXPECT_TRUE(vec_eq(*dec.idem_r, Vec{q(1)}));
  EXPECT_TRUE(vec_eq(*dec.idem_s, Vec{q(1)}));
}

TEST(DecomposeIdeal, ZeroIdeal) {
  IdealDecomposition dec = decompose_ideal(kkk(), {});
  EXPECT_EQ(dec.j1.dim() + dec.n2.dim() + dec.j3.dim(), 0u);
}

TEST(DecomposeIdeal, NotAnIdealRejected) {
  EXPECT_THROW(decompose_ideal(kkk(), {unit_vec(3, 0, Q)}), std::runtime_error);
}

TEST(Extract, TrivialActionGivesTrivialComponents) {
  TriangularAlgebra L = kkk();
  auto act = fixtures::trivial_action(L.algebra, make_cyclic(2));
  RelativePartialAction rel = extract_component_actions(L, act);
  EXPECT_TRUE(validate_relative(rel).ok());
  EXPECT_EQ(rel.alpha_n.at(1), ExactMatrix::identity(1, Q));
}

TEST(Extract, SignActionComponents) {
  TriangularAlgebra L = kkk();
  RelativePartialAction rel = extract_component_actions(L, sign_action(L));
  EXPECT_EQ(rel.on_r.alpha.at(1), ExactMatrix::identity(1, Q));
  EXPECT_EQ(rel.on_s.alpha.at(1), ExactMatrix::identity(1, Q));
  ExactMatrix neg = ExactMatrix::identity(1, Q);
  neg.at(0, 0) = q(-1);
  EXPECT_EQ(rel.alpha_n.at(1), neg);
}

TEST(Extract, CornerSwapViolatesHypothesis) {
  auto K = std::make_shared<StructureAlgebra>(field_algebra(Q));
  Bimodule bm;
  bm.left_algebra = K;
  bm.right_algebra = K;
  bm.dim = 0;
  bm.left_act.push_back(ExactMatrix(0, 0, Q));
  bm.right_act.push_back(ExactMatrix(0, 0, Q));
  TriangularAlgebra L = assemble_triangular(bm);
  TwistedPartialAction act;
  act.algebra = L.algebra;
  act.group = make_cyclic(2);
  act.support = {0, 1};
  act.idem[0] = L.algebra->unit;
  act.idem[1] = L.algebra->unit;
  act.alpha.emplace(0, ExactMatrix::identity(2, Q));
  ExactMatrix sw(2, 2, Q);
  sw.at(0, 1) = q(1);
  sw.at(1, 0) = q(1);
  act.alpha.emplace(1, std::move(sw));
  ASSERT_TRUE(validate_action(act).ok());
  try {
    extract_component_actions(L, act);
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("corner hypothesis"), std::string::npos);
  }
}

TEST(Iso, TrivialGroupIsReshuffle) {
  TriangularAlgebra L = kkk();
  auto act = fixtures::trivial_action(L.algebra, make_cyclic(1));
  TriangularIso iso = triangular_crossed_iso(L, act);
  EXPECT_TRUE(iso.checks.ok()) << iso.checks.str();
  EXPECT_EQ(iso.lhs.dim(), 3u);
}

TEST(Iso, SignActionSixDimensional) {
  TriangularAlgebra L = kkk();
  TriangularIso iso = triangular_crossed_iso(L, sign_action(L));
  EXPECT_TRUE(iso.checks.ok()) << iso.checks.str();
  EXPECT_EQ(iso.lhs.dim(), 6u);
  EXPECT_EQ(iso.rhs.r_dim(), 2u);
  EXPECT_EQ(iso.rhs.n_dim(), 2u);
  EXPECT_EQ(iso.rhs.s_dim(), 2u);
}

TEST(Iso, DiagonalExtensionMatchesThreeCopies) {
  Restriction r = fixtures::c3_restriction(Q);
  TriangularAlgebra L = assemble_triangular(regular_bimodule(r.action.algebra));
  TwistedPartialAction act = diagonal_extension(r.action, L);
  ASSERT_TRUE(validate_action(act).ok());
  TriangularIso iso = triangular_crossed_iso(L, act);
  EXPECT_TRUE(iso.checks.ok()) << iso.checks.str();
  CrossedProduct rcp = build_crossed(r.action);
  EXPECT_EQ(iso.rhs.r_dim(), rcp.dim());
  EXPECT_EQ(iso.rhs.n_dim(), rcp.dim());
  EXPECT_EQ(iso.rhs.s_dim(), rcp.dim());
  EXPECT_EQ(iso.lhs.dim(), 3 * rcp.dim());
}

TEST(Iso, TensorBimoduleGlobalSwap) {
  auto [L, act] = fixtures::tensor_global_triangular(Q);
  ASSERT_TRUE(validate_action(act).ok());
  TriangularIso iso = triangular_crossed_iso(L, act);
  EXPECT_TRUE(iso.checks.ok()) << iso.checks.str();
  EXPECT_EQ(iso.lhs.dim(), 10u);  // L has dim 5, |G| = 2, all D_g = L
  // alpha_2 on N is the swap, not the identity
  EXPECT_NE(iso.components.alpha_n.at(1), ExactMatrix::identity(2, Q));
}

TEST(ValidateRelative, UnitalPreconditionReported) {
  auto [L, act] = fixtures::tensor_global_triangular(Q);
  RelativePartialAction rel = extract_component_actions(L, act);
  ASSERT_TRUE(validate_relative(rel).ok());
  // break the hypothesis: claim N_1 bigger than what the corner unit fixes
  rel.on_r.idem[1] = Vec{Scalar::one(Q), Scalar::zero(Q)};  // e0 only
  auto rep = validate_relative(rel);
  bool unital_issue = false;
  for (const auto& i : rep.issues)
    if (i.check == "rel-unital") unital_issue = true;
  EXPECT_TRUE(unital_issue) << rep.str();
}

TEST(Components, ReassembleExactly) {
  TriangularAlgebra L = kkk();
  auto rad = jacobson_radical(*L.algebra);
  IdealDecomposition dec = decompose_ideal(L, rad);
  std::vector<Vec> rebuilt;
  for (const auto& v : dec.j1.basis) rebuilt.push_back(L.embed(v, zero_vec(1, Q), zero_vec(1, Q)));
  for (const auto& v : dec.n2.basis) rebuilt.push_back(L.embed(zero_vec(1, Q), v, zero_vec(1, Q)));
  for (const auto& v : dec.j3.basis) rebuilt.push_back(L.embed(zero_vec(1, Q), zero_vec(1, Q), v));
  EXPECT_TRUE(span_of(rebuilt, 3, Q) == span_of(rad, 3, Q));
}

TEST(PreserveCorners, DetectsSwap) {
  auto K = std::make_shared<StructureAlgebra>(field_algebra(Q));
  Bimodule bm;
  bm.left_algebra = K;
  bm.right_algebra = K;
  bm.dim = 0;
  bm.left_act.push_back(ExactMatrix(0, 0, Q));
  bm.right_act.push_back(ExactMatrix(0, 0, Q));
  TriangularAlgebra L = assemble_triangular(bm);
  EXPECT_TRUE(preserves_corners(L, L, ExactMatrix::identity(2, Q)));
  ExactMatrix sw(2, 2, Q);
  sw.at(0, 1) = q(1);
  sw.at(1, 0) = q(1);
  EXPECT_FALSE(preserves_corners(L, L, sw));
}

}  // namespace
