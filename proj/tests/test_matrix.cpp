#include <gtest/gtest.h>

#include "pcp/matrix.hpp"
#include "pcp/rng.hpp"

namespace {

using namespace pcp;

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long n, long d = 1) {
  return Scalar::parse(std::to_string(n) + "/" + std::to_string(d), Q);
}

ExactMatrix mat(const std::vector<std::vector<long>>& rows, const FieldSpec& f = Q) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), f);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar::from_long(rows[i][j], f);
  return m;
}

ExactMatrix random_matrix(Rng& rng, size_t rows, size_t cols, const FieldSpec& f) {
  ExactMatrix m(rows, cols, f);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (f.is_rationals()) {
        long num = rng.range(-4, 4);
        long den = rng.range(1, 3);
        m.at(i, j) = Scalar::parse(std::to_string(num) + "/" + std::to_string(den), f);
      } else {
        m.at(i, j) = Scalar::from_long(rng.range(0, static_cast<long>(f.p) - 1), f);
      }
    }
  return m;
}

TEST(Scalar, CanonicalRationals) {
  Scalar a = Scalar::parse("4/6", Q);
  EXPECT_EQ(a.str(), "2/3");
  Scalar b = Scalar::parse("-3/-6", Q);
  EXPECT_EQ(b.str(), "1/2");
  EXPECT_EQ((a + b).str(), "7/6");
  EXPECT_EQ((a * b).str(), "1/3");
  EXPECT_EQ((a - a).str(), "0");
  EXPECT_EQ(a.inverse().str(), "3/2");
}

TEST(Scalar, PrimeField) {
  FieldSpec f7 = FieldSpec::prime_field(7);
  Scalar a = Scalar::from_long(5, f7), b = Scalar::from_long(4, f7);
  EXPECT_EQ((a + b).str(), "2");
  EXPECT_EQ((a * b).str(), "6");
  EXPECT_EQ((-a).str(), "2");
  EXPECT_EQ(a.inverse().str(), "3");  // 5*3 = 15 = 1 mod 7
  EXPECT_EQ(Scalar::parse("3/5", f7).str(), "2");  // 3 * 5^{-1} = 9 = 2
  EXPECT_THROW(FieldSpec::prime_field(6), std::runtime_error);
  EXPECT_THROW(a + Scalar::one(Q), std::runtime_error);
}

TEST(Rref, Identity) {
  auto rr = rref(ExactMatrix::identity(3, Q));
  EXPECT_EQ(rr.reduced, ExactMatrix::identity(3, Q));
  EXPECT_EQ(rr.pivots, (std::vector<size_t>{0, 1, 2}));
  EXPECT_EQ(rr.rank, 3u);
}

TEST(Rref, RankDeficient) {
  auto rr = rref(mat({{2, 4}, {1, 2}}));
  EXPECT_EQ(rr.reduced, mat({{1, 2}, {0, 0}}));
  EXPECT_EQ(rr.rank, 1u);
}

TEST(Rref, Zero) {
  auto rr = rref(ExactMatrix(2, 2, Q));
  EXPECT_TRUE(rr.reduced.is_zero());
  EXPECT_TRUE(rr.pivots.empty());
  EXPECT_EQ(rr.rank, 0u);
}

TEST(Rref, Idempotent) {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    ExactMatrix m = random_matrix(rng, r, c, Q);
    auto once = rref(m);
    auto twice = rref(once.reduced);
    EXPECT_EQ(once.reduced, twice.reduced);
  }
}

TEST(Kernel, Identity) { EXPECT_TRUE(kernel_basis(ExactMatrix::identity(2, Q)).empty()); }

TEST(Kernel, Line) {
  auto ker = kernel_basis(mat({{1, 2}}));
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(ker[0][0], q(-2));
  EXPECT_EQ(ker[0][1], q(1));
}

TEST(Kernel, FullKernel) {
  auto ker = kernel_basis(ExactMatrix(1, 3, Q));
  EXPECT_EQ(ker.size(), 3u);
}

TEST(Kernel, RankNullity) {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    FieldSpec f = (t % 2 == 0) ? Q : FieldSpec::prime_field(7);
    ExactMatrix m = random_matrix(rng, r, c, f);
    auto rr = rref(m);
    auto ker = kernel_basis(m);
    EXPECT_EQ(rr.rank + ker.size(), c);
    for (const auto& v : ker) EXPECT_TRUE(is_zero_vec(m.apply(v)));
  }
}

TEST(Solve, Identity) {
  Vec rhs{q(5), q(7)};
  auto x = solve(ExactMatrix::identity(2, Q), rhs);
  ASSERT_TRUE(x);
  EXPECT_TRUE(vec_eq(*x, rhs));
}

TEST(Solve, FreeVariableZero) {
  auto x = solve(mat({{1, 1}}), Vec{q(3)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], q(3));
  EXPECT_EQ((*x)[1], q(0));
}

TEST(Solve, Inconsistent) {
  EXPECT_FALSE(solve(mat({{1}, {1}}), Vec{q(0), q(1)}));
}

TEST(Solve, ConsistentRandom) {
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    ExactMatrix m = random_matrix(rng, r, c, Q);
    Vec x0;
    for (size_t j = 0; j < c; ++j) x0.push_back(q(rng.range(-3, 3)));
    Vec rhs = m.apply(x0);
    auto y = solve(m, rhs);
    ASSERT_TRUE(y);
    EXPECT_TRUE(vec_eq(m.apply(*y), rhs));
  }
}

TEST(Det, Basics) {
  EXPECT_EQ(det(ExactMatrix::identity(4, Q)), q(1));
  EXPECT_EQ(det(mat({{3, 5}, {0, 0}})), q(0));
  EXPECT_EQ(det(mat({{2, 1}, {1, 1}})), q(1));
  EXPECT_THROW(det(ExactMatrix(2, 3, Q)), std::runtime_error);
}

TEST(Det, Multiplicative) {
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    size_t n = 1 + rng.below(6);
    FieldSpec f = (t % 2 == 0) ? Q : FieldSpec::prime_field(11);
    ExactMatrix a = random_matrix(rng, n, n, f);
    ExactMatrix b = random_matrix(rng, n, n, f);
    EXPECT_EQ(det(a) * det(b), det(a * b));
  }
}

TEST(Inverse, RoundTrip) {
  ExactMatrix m = mat({{2, 1}, {1, 1}});
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, ExactMatrix::identity(2, Q));
  EXPECT_FALSE(inverse(mat({{1, 2}, {2, 4}})));
}

TEST(Subspace, CanonicalAndContains) {
  auto s = span_of({Vec{q(2), q(4), q(0)}, Vec{q(1), q(2), q(1)}}, 3, Q);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(contains(s, Vec{q(3), q(6), q(5)}));
  EXPECT_FALSE(contains(s, Vec{q(0), q(1), q(0)}));
  auto s2 = span_of({Vec{q(1), q(2), q(1)}, Vec{q(1), q(2), q(-1)}}, 3, Q);
  EXPECT_TRUE(s == s2);
}

TEST(Subspace, IntersectAndCoords) {
  auto a = span_of({Vec{q(1), q(0), q(0)}, Vec{q(0), q(1), q(0)}}, 3, Q);
  auto b = span_of({Vec{q(0), q(1), q(0)}, Vec{q(0), q(0), q(1)}}, 3, Q);
  auto cap = subspace_intersect(a, b);
  EXPECT_EQ(cap.dim(), 1u);
  EXPECT_TRUE(contains(cap, Vec{q(0), q(5), q(0)}));
  auto c = coords_in(a, Vec{q(3), q(-2), q(0)});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], q(3));
  EXPECT_EQ((*c)[1], q(-2));
  EXPECT_FALSE(coords_in(a, Vec{q(0), q(0), q(1)}));
}

TEST(Matrix, MixedFieldRejected) {
  Vec row{Scalar::one(Q), Scalar::one(FieldSpec::prime_field(5))};
  EXPECT_THROW(ExactMatrix::from_rows({row}, 2, Q), std::runtime_error);
}

}  // namespace
