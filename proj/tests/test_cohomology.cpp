#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hwfrob;

namespace {

/// Tuples (l_0..l_r), every l_i <= -1, summing to -d, by direct recursion.
void enumerate(int r, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    if (remaining >= 1) {
      cur.push_back(-remaining);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int a = 1; a <= remaining - (r - static_cast<int>(cur.size())); ++a) {
    cur.push_back(-a);
    enumerate(r, remaining - a, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> brute_tuples(int r, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  enumerate(r, d, cur, out);
  return out;
}

Polynomial random_form(std::mt19937_64& rng, const PolyRing& R, int d, int terms) {
  std::uniform_int_distribution<std::uint32_t> c(0, R.p() - 1);
  std::uniform_int_distribution<int> v(0, R.nvars - 1);
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int i = 0; i < d; ++i) ++m.exp[static_cast<std::size_t>(v(rng))];
    t.push_back({m, c(rng)});
  }
  return Polynomial::from_terms(R, std::move(t));
}

GradedHomomorphism random_hom(std::mt19937_64& rng, const PolyRing& R, const GradedFreeModule& S,
                              const GradedFreeModule& T) {
  std::vector<Polynomial> e;
  for (int d : S.twists) {
    for (int t : T.twists) e.push_back(d - t >= 0 ? random_form(rng, R, d - t, 4) : Polynomial(R));
  }
  return GradedHomomorphism(R, S, T, std::move(e));
}

}  // namespace

TEST(CohomologySpace, BasisCountMatchesBruteEnumeration) {
  for (int r = 1; r <= 6; ++r) {
    for (int d = 0; d <= 12; ++d) {
      const auto tuples = brute_tuples(r, d);
      const CohomologySpace space(GradedFreeModule{{d}}, r);
      ASSERT_EQ(static_cast<std::size_t>(space.dim()), tuples.size()) << "r=" << r << " d=" << d;
      EXPECT_EQ(static_cast<std::uint64_t>(space.dim()), binom(d - 1, r));
      auto sorted = tuples;
      std::sort(sorted.begin(), sorted.end());
      const auto basis = space.basis();
      for (std::size_t k = 0; k < basis.size(); ++k) {
        EXPECT_EQ(basis[k].exponents, sorted[k]);
        EXPECT_EQ(space.index_of(0, CohomologySpace::shifted(basis[k].exponents)), static_cast<int>(k));
      }
    }
  }
}

TEST(CohomologySpace, SlotsAreConcatenated) {
  const CohomologySpace space(GradedFreeModule{{3, 5, 1, 4}}, 2);
  EXPECT_EQ(space.dim(), 1 + 6 + 0 + 3);
  EXPECT_EQ(space.slot_offset(1), 1);
  EXPECT_EQ(space.slot_offset(3), 7);
  EXPECT_EQ(static_cast<std::uint64_t>(space.dim()), top_cohomology_dim(space.module(), 2));
  const auto b = space.basis();
  EXPECT_EQ(b[0].slot, 0);
  EXPECT_EQ(b[7].slot, 3);
}

TEST(InducedMap, TruncatesNonnegativeExponents) {
  const PolyRing R(PrimeField(5), 3);
  const GradedHomomorphism A(R, GradedFreeModule{{4}}, GradedFreeModule{{3}}, {Polynomial::variable(R, 0)});
  const auto M = induced_map(A, 2);
  EXPECT_EQ(M, FpMatrix::from_rows(R.field, {{1}, {0}, {0}}));
}

TEST(InducedMap, IsFunctorial) {
  std::mt19937_64 rng(31);
  const PolyRing R(PrimeField(7), 4);
  for (int it = 0; it < 10; ++it) {
    const GradedFreeModule F2{{7, 6}}, F1{{5, 5, 4}}, F0{{4, 3}};
    const auto B = random_hom(rng, R, F2, F1);
    const auto A = random_hom(rng, R, F1, F0);
    EXPECT_EQ(induced_map(hom_compose(A, B), 3), fp_multiply(induced_map(B, 3), induced_map(A, 3)));
  }
}

TEST(QuotientBasis, DimensionIsKernelMinusImage) {
  const PolyRing R(PrimeField(3), 3);
  const std::vector<std::string> v{"x", "y", "z"};
  const auto f = parse_poly("x^3 + y^3 + z^3", R, v);
  const GradedHomomorphism A(R, GradedFreeModule{{3}}, GradedFreeModule{{0}}, {f});
  const FpMatrix K = induced_map(A, 2);
  const FpMatrix Im(R.field, 0, K.rows());
  const auto Q = quotient_basis(K, Im);
  EXPECT_EQ(Q.rows(), 1);
  EXPECT_EQ(Q.row(0), std::vector<std::uint32_t>{1});
}

TEST(QuotientBasis, RejectsImageOutsideKernel) {
  const PrimeField F(5);
  const auto K = FpMatrix::from_rows(F, {{1}, {0}});
  const auto Im = FpMatrix::from_rows(F, {{1, 0}});
  EXPECT_THROW(quotient_basis(K, Im), InternalError);
}

TEST(FormatLaurent, DenominatorForm) {
  const LaurentBasisElement b{0, {-2, -1, -3}};
  EXPECT_EQ(format_laurent(b, {"x", "y", "z"}), "1/(x^2*y*z^3)");
}
