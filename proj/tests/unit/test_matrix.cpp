#include <random>

#include <gtest/gtest.h>

#include "hopfkit/matrix.hpp"
#include "hopfkit/sparse.hpp"

using namespace hopfkit;

namespace {

Matrix random_matrix(FieldSpec f, std::size_t r, std::size_t c, std::mt19937& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_int(f, d(rng));
  return m;
}

// Rank oracle: the largest k with a nonzero k x k minor, by cofactor expansion.
Scalar minor_det(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  Scalar acc = Scalar::zero(m.field());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::size_t> r2(rows.begin() + 1, rows.end()), c2;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) c2.push_back(cols[k]);
    Scalar t = m(rows[0], cols[j]) * minor_det(m, r2, c2);
    if (j % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::size_t minor_rank(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    for (const auto& r : rs)
      for (const auto& c : cs)
        if (!minor_det(m, r, c).is_zero()) return k;
  }
  return 0;
}

}  // namespace

TEST(Rank, SmallCases) {
  const auto q = FieldSpec::rationals();
  EXPECT_EQ(rank(Matrix(q, 3, 3)), 0u);
  EXPECT_EQ(rank(Matrix::identity(q, 5)), 5u);
  EXPECT_EQ(rank(Matrix::from_rows(q, {{1, 1}, {1, 1}})), 1u);
  EXPECT_EQ(rank(Matrix::from_rows(FieldSpec::prime(2), {{1, 1}, {1, -1}})), 1u);
  EXPECT_EQ(rank(Matrix::from_rows(q, {{1, 1}, {1, -1}})), 2u);
}

TEST(Rank, AgreesWithMinorOracle) {
  std::mt19937 rng(11);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::cyclotomic(3)}) {
    for (int t = 0; t < 25; ++t) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      Matrix m = random_matrix(f, r, c, rng, -1, 1);
      EXPECT_EQ(rank(m), minor_rank(m)) << m.to_string();
      EXPECT_EQ(row_reduce(m).rank(), minor_rank(m));
      EXPECT_EQ(rank(m) + kernel_basis(m).cols(), m.cols());
    }
  }
}

TEST(Rank, LargeRationalUsesBothPaths) {
  std::mt19937 rng(3);
  const auto q = FieldSpec::rationals();
  Matrix a = random_matrix(q, 70, 8, rng);
  Matrix b = random_matrix(q, 8, 70, rng);
  Matrix p = a * b;  // rank <= 8
  EXPECT_EQ(rank(p), 8u);
  EXPECT_EQ(row_reduce(p).rank(), 8u);
}

TEST(SolveLinear, Cases) {
  const auto q = FieldSpec::rationals();
  Matrix b = Matrix::from_rows(q, {{3}, {-2}});
  auto s = solve_linear(Matrix::identity(q, 2), b);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, b);
  EXPECT_TRUE(s->kernel.empty());

  auto z = solve_linear(Matrix(q, 2, 2), Matrix(q, 2, 1));
  ASSERT_TRUE(z);
  EXPECT_EQ(z->kernel.size(), 2u);

  Matrix a = Matrix::from_rows(q, {{1, 1}, {1, 1}});
  auto t = solve_linear(a, Matrix::from_rows(q, {{1}, {1}}));
  ASSERT_TRUE(t);
  EXPECT_EQ(a * t->particular, Matrix::from_rows(q, {{1}, {1}}));
  EXPECT_EQ(t->kernel.size(), 1u);
  EXPECT_TRUE((a * t->kernel[0]).is_zero());

  EXPECT_FALSE(solve_linear(a, Matrix::from_rows(q, {{1}, {0}})));
  EXPECT_THROW(solve_linear(a, Matrix(q, 3, 1)), DimensionMismatch);
}

TEST(Inverse, RoundTrip) {
  std::mt19937 rng(5);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(5), FieldSpec::cyclotomic(4)}) {
    for (int t = 0; t < 10; ++t) {
      Matrix m = random_matrix(f, 4, 4, rng);
      auto inv = inverse(m);
      if (determinant(m).is_zero()) {
        EXPECT_FALSE(inv);
      } else {
        ASSERT_TRUE(inv);
        EXPECT_TRUE((m * *inv).is_identity());
      }
    }
  }
  Matrix tall = Matrix::from_rows(FieldSpec::rationals(), {{1, 0}, {2, 1}, {0, 3}});
  EXPECT_TRUE((left_inverse(tall) * tall).is_identity());
}

TEST(Kronecker, DefinitionAndRank) {
  const auto q = FieldSpec::rationals();
  EXPECT_EQ(kronecker(Matrix::identity(q, 2), Matrix::identity(q, 3)), Matrix::identity(q, 6));
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(q, 2, 3, rng, -1, 1), b = random_matrix(q, 3, 2, rng, -1, 1);
    Matrix k = kronecker(a, b);
    ASSERT_EQ(k.rows(), 6u);
    ASSERT_EQ(k.cols(), 6u);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(k(i * 3 + r, j * 2 + c), a(i, j) * b(r, c));
    Matrix a2 = random_matrix(q, 2, 2, rng, -1, 1), b2 = random_matrix(q, 2, 2, rng, -1, 1);
    EXPECT_EQ(rank(kronecker(a2, b2)), rank(a2) * rank(b2));
    Matrix c2 = random_matrix(q, 2, 2, rng, -1, 1);
    EXPECT_EQ(kronecker(kronecker(a2, b2), c2), kronecker(a2, kronecker(b2, c2)));
    // mixed product
    EXPECT_EQ(kronecker(a2, b2) * kronecker(b2, c2), kronecker(a2 * b2, b2 * c2));
  }
}

TEST(SparseRowReducer, MatchesDenseRank) {
  std::mt19937 rng(2);
  for (FieldSpec f : {FieldSpec::prime(3), FieldSpec::rationals()}) {
    Matrix m = random_matrix(f, 30, 12, rng, -1, 1);
    // force dependencies
    for (std::size_t j = 0; j < 12; ++j) m(5, j) = m(1, j) + m(2, j);
    SparseRowReducer red(f);
    for (std::size_t i = 0; i < m.rows(); ++i) red.insert(SparseVec::from_dense(m.row(i)));
    EXPECT_EQ(red.rank(), rank(m));
  }
}
