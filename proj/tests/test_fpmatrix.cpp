#include <gtest/gtest.h>

#include <random>

#include "hwfrob.hpp"

using namespace hwfrob;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, const PrimeField& F, int r, int c, int zero_percent = 0) {
  std::uniform_int_distribution<std::uint32_t> v(0, F.modulus() - 1);
  std::uniform_int_distribution<int> pct(0, 99);
  FpMatrix M(F, r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) M.set(i, j, pct(rng) < zero_percent ? 0 : v(rng));
  }
  return M;
}

/// Determinant by cofactor-free Gaussian elimination, used as an oracle.
std::uint32_t det(FpMatrix M) {
  const PrimeField& F = M.field();
  const int n = M.rows();
  std::uint32_t d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n && piv < 0; ++i) {
      if (M.at(i, c) != 0) piv = i;
    }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) {
        const auto t = M.at(c, j);
        M.set(c, j, M.at(piv, j));
        M.set(piv, j, t);
      }
      d = F.neg(d);
    }
    d = F.mul(d, M.at(c, c));
    const auto inv = F.inv(M.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      const auto f = F.mul(M.at(i, c), inv);
      for (int j = c; j < n; ++j) M.set(i, j, F.sub(M.at(i, j), F.mul(f, M.at(c, j))));
    }
  }
  return d;
}

std::uint32_t eval_desc(const std::vector<std::uint32_t>& c, std::uint32_t t, const PrimeField& F) {
  std::uint32_t acc = 0;
  for (auto v : c) acc = F.fma(v, acc, t);
  return acc;
}

}  // namespace

TEST(FpMatrix, RrefIsReducedAndRankIsRowSpaceDimension) {
  std::mt19937_64 rng(5);
  const PrimeField F(7);
  for (int it = 0; it < 40; ++it) {
    const auto A = random_matrix(rng, F, 1 + it % 6, 1 + (it * 7) % 8, 60);
    const auto E = fp_rref(A);
    EXPECT_EQ(static_cast<int>(E.pivots.size()), E.rows.rows());
    for (std::size_t i = 0; i < E.pivots.size(); ++i) {
      EXPECT_EQ(E.rows.at(static_cast<int>(i), E.pivots[i]), 1u);
      for (int k = 0; k < E.rows.rows(); ++k) {
        if (k != static_cast<int>(i)) {
          EXPECT_EQ(E.rows.at(k, E.pivots[i]), 0u);
        }
      }
    }
    for (int i = 0; i < A.rows(); ++i) {
      const auto v = fp_reduce(A.row(i), E);
      EXPECT_TRUE(std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }));
    }
    EXPECT_EQ(fp_rank(A), fp_rank(fp_transpose(A)));
  }
}

TEST(FpMatrix, LeftKernelAnnihilatesAndHasComplementaryDimension) {
  std::mt19937_64 rng(9);
  const PrimeField F(5);
  for (int it = 0; it < 40; ++it) {
    const auto A = random_matrix(rng, F, 1 + it % 7, 1 + (it * 3) % 5, 50);
    const auto K = fp_left_kernel(A);
    EXPECT_EQ(K.rows(), A.rows() - fp_rank(A));
    if (K.rows() > 0) {
      EXPECT_TRUE(fp_multiply(K, A).is_zero());
    }
    EXPECT_EQ(fp_rank(K), K.rows());
  }
}

TEST(FpMatrix, SolveLeftRecoversCoefficients) {
  std::mt19937_64 rng(13);
  const PrimeField F(11);
  int solved = 0;
  for (int it = 0; it < 40; ++it) {
    const int g = 1 + it % 4;
    const auto B = random_matrix(rng, F, g, g + 3);
    if (fp_rank(B) != g) continue;
    const auto X = random_matrix(rng, F, g, g);
    EXPECT_EQ(fp_solve_left(B, fp_multiply(X, B)), X);
    ++solved;
  }
  EXPECT_GT(solved, 20);
}

TEST(FpMatrix, SolveLeftRejectsInconsistentSystems) {
  const PrimeField F(5);
  const auto B = FpMatrix::from_rows(F, {{1, 0, 0}});
  EXPECT_THROW(fp_solve_left(B, FpMatrix::from_rows(F, {{0, 1, 0}})), InternalError);
  EXPECT_THROW(fp_solve_left(FpMatrix::from_rows(F, {{1, 1}, {2, 2}}), FpMatrix::from_rows(F, {{1, 1}})), UsageError);
}

TEST(FpMatrix, CharpolyMatchesDeterminantOracle) {
  std::mt19937_64 rng(17);
  const PrimeField F(101);
  for (int it = 0; it < 60; ++it) {
    const int n = it % 9;
    const auto A = random_matrix(rng, F, n, n, it % 3 == 0 ? 70 : 0);
    const auto c = fp_charpoly(A);
    ASSERT_EQ(static_cast<int>(c.size()), n + 1);
    EXPECT_EQ(c.front(), 1u);
    for (std::uint32_t t = 0; t <= static_cast<std::uint32_t>(n) + 1; ++t) {
      FpMatrix T(F, n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) T.set(i, j, F.sub(i == j ? t : 0u, A.at(i, j)));
      }
      EXPECT_EQ(eval_desc(c, t, F), det(T));
    }
  }
}

TEST(FpMatrix, CharpolyInvariantUnderSimilarity) {
  std::mt19937_64 rng(23);
  const PrimeField F(3);
  for (int it = 0; it < 30; ++it) {
    const int n = 1 + it % 6;
    const auto A = random_matrix(rng, F, n, n);
    const auto P = random_matrix(rng, F, n, n);
    if (fp_rank(P) != n) continue;
    const auto Pinv = fp_solve_left(P, FpMatrix::identity(F, n));
    EXPECT_EQ(fp_charpoly(fp_multiply(fp_multiply(Pinv, A), P)), fp_charpoly(A));
    EXPECT_EQ(fp_charpoly(fp_transpose(A)), fp_charpoly(A));
  }
}

TEST(FpMatrix, FormatCharpoly) {
  EXPECT_EQ(format_charpoly({1, 2, 1}), "a^2 + 2*a + 1");
  EXPECT_EQ(format_charpoly({1, 1, 1, 0, 0, 0}), "a^5 + a^4 + a^3");
  EXPECT_EQ(format_charpoly({1, 0, 1}), "a^2 + 1");
  EXPECT_EQ(format_charpoly({1}), "1");
}
