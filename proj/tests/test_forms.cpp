#include <gtest/gtest.h>

#include "pcp/forms.hpp"

namespace {

using namespace pcp;

const FieldSpec Q = FieldSpec::rationals();

ExactMatrix gram_of(const StructureAlgebra& a, const LinearForm& lam) {
  ExactMatrix g(a.dim, a.dim, a.field);
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) g.at(i, j) = lam.apply(a.basis_product(i, j));
  return g;
}

TEST(Frobenius, DualNumbers) {
  StructureAlgebra a = dual_numbers(Q);
  FormSearch fs = frobenius_form(a);
  ASSERT_TRUE(fs.form);
  // Gram = [[l0, l1], [l1, 0]], det = -l1^2: any witness has l1 != 0
  EXPECT_FALSE(fs.form->coords[1].is_zero());
  EXPECT_FALSE(det(gram_of(a, *fs.form)).is_zero());
}

TEST(Frobenius, UpperTriangularHasNone) {
  FormSearch fs = frobenius_form(upper_triangular2(Q));
  EXPECT_FALSE(fs.form);
  EXPECT_TRUE(fs.exact);
  EXPECT_EQ(fs.method, "symbolic");
}

TEST(Frobenius, MatrixAlgebraTraceWorks) {
  StructureAlgebra a = matrix_algebra(Q, 2);
  FormSearch fs = frobenius_form(a);
  ASSERT_TRUE(fs.form);
  EXPECT_EQ(fs.method, "candidate");  // the trace form is tried first and works
  EXPECT_FALSE(det(gram_of(a, *fs.form)).is_zero());
}

TEST(Symmetric, MatrixAlgebraTrace) {
  StructureAlgebra a = matrix_algebra(Q, 2);
  FormSearch fs = symmetric_form(a);
  ASSERT_TRUE(fs.form);
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      EXPECT_EQ(fs.form->apply(a.basis_product(i, j)), fs.form->apply(a.basis_product(j, i)));
  EXPECT_FALSE(det(gram_of(a, *fs.form)).is_zero());
}

TEST(Symmetric, DualNumbersCommutative) {
  FormSearch fs = symmetric_form(dual_numbers(Q));
  ASSERT_TRUE(fs.form);
  EXPECT_FALSE(fs.form->coords[1].is_zero());
}

TEST(Symmetric, UpperTriangularHasNone) {
  FormSearch fs = symmetric_form(upper_triangular2(Q));
  EXPECT_FALSE(fs.form);
  EXPECT_TRUE(fs.exact);
}

TEST(Forms, CommutativeAgreement) {
  StructureAlgebra cases[] = {product_of_fields(Q, 3), dual_numbers(Q),
                              group_algebra(Q, make_cyclic(4)),
                              direct_sum(dual_numbers(Q), field_algebra(Q))};
  for (const auto& a : cases) {
    FormSearch f = frobenius_form(a);
    FormSearch s = symmetric_form(a);
    EXPECT_EQ(static_cast<bool>(f.form), static_cast<bool>(s.form));
  }
}

TEST(Forms, ZeroDimensional) {
  StructureAlgebra zero = StructureAlgebra::make(Q, 0, {}, {}, {});
  EXPECT_TRUE(frobenius_form(zero).form);
}

TEST(SearchPaths, GridDecision) {
  // K^7 with a single search direction: n = 7 > 6, grid size 8 <= budget
  StructureAlgebra a = product_of_fields(Q, 7);
  std::vector<Vec> mu{Vec(7, Scalar::one(Q))};
  FormSearch fs = detail::search_nondegenerate(a, mu, {}, 1);
  ASSERT_TRUE(fs.form);
  EXPECT_EQ(fs.method, "grid");
}

TEST(SearchPaths, RandomizedFindsWitness) {
  // full search space over K^7: grid 8^7 is out of budget, sampling works
  StructureAlgebra a = product_of_fields(Q, 7);
  std::vector<Vec> mu;
  for (size_t i = 0; i < 7; ++i) mu.push_back(unit_vec(7, i, Q));
  FormSearch fs = detail::search_nondegenerate(a, mu, {}, 1);
  ASSERT_TRUE(fs.form);
  EXPECT_EQ(fs.method, "randomized");
  EXPECT_FALSE(det(detail::gram_at(a, mu,
                                   [&] {
                                     // recover t-coordinates = the witness itself here
                                     return fs.form->coords;
                                   }()))
                   .is_zero());
}

TEST(SearchPaths, RandomizedNoneIsProbabilistic) {
  // upper triangular + K^5 is 8-dimensional and identically singular
  StructureAlgebra a = direct_sum(upper_triangular2(Q), product_of_fields(Q, 5));
  FormSearch fs = frobenius_form(a);
  EXPECT_FALSE(fs.form);
  EXPECT_FALSE(fs.exact);
  EXPECT_EQ(fs.method, "randomized");
  EXPECT_NE(fs.note.find("probability"), std::string::npos);
}

TEST(SearchPaths, DeterministicGivenSeed) {
  StructureAlgebra a = product_of_fields(Q, 7);
  std::vector<Vec> mu;
  for (size_t i = 0; i < 7; ++i) mu.push_back(unit_vec(7, i, Q));
  FormSearch a1 = detail::search_nondegenerate(a, mu, {}, 99);
  FormSearch a2 = detail::search_nondegenerate(a, mu, {}, 99);
  ASSERT_TRUE(a1.form && a2.form);
  EXPECT_TRUE(vec_eq(a1.form->coords, a2.form->coords));
}

TEST(Forms, PrimeFieldWitness) {
  FieldSpec f7 = FieldSpec::prime_field(7);
  StructureAlgebra a = dual_numbers(f7);
  FormSearch fs = frobenius_form(a);
  ASSERT_TRUE(fs.form);
  EXPECT_FALSE(det(gram_of(a, *fs.form)).is_zero());
}

}  // namespace
