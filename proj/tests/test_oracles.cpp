#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hwfrob;

TEST(Hyperelliptic, EllipticEntryIsTheHasseInvariant) {
  const AffineHyperellipticModel m5{PrimeField(5), {}, {1, 0, 0, 1}};
  EXPECT_EQ(hyperelliptic_hw(m5), FpMatrix::from_rows(PrimeField(5), {{0}}));
  const AffineHyperellipticModel m7{PrimeField(7), {}, {1, 0, 0, 1}};
  EXPECT_EQ(hyperelliptic_hw(m7), FpMatrix::from_rows(PrimeField(7), {{3}}));
}

TEST(Hyperelliptic, GenusAndCompletedSquare) {
  const AffineHyperellipticModel x023{PrimeField(5), {-1, -1, 0, -1}, {-2, 2, -3, 0, 0, -2}};
  EXPECT_EQ(hyperelliptic_genus(x023), 2);
  EXPECT_EQ(hyperelliptic_hw(x023).rows(), 2);
}

TEST(Hyperelliptic, RejectsBadModels) {
  EXPECT_THROW(hyperelliptic_hw({PrimeField(2), {}, {1, 0, 0, 1}}), UsageError);
  EXPECT_THROW(hyperelliptic_hw({PrimeField(7), {}, {0, 0, 1, 1}}), InputError);
  EXPECT_THROW(hyperelliptic_hw({PrimeField(7), {}, {1, 1}}), InputError);
}

TEST(Elliptic, KnownTraces) {
  EXPECT_EQ(elliptic_ap({PrimeField(5), 0, 0, 0, 0, 1}), 0);
  EXPECT_EQ(elliptic_ap({PrimeField(7), 0, 0, 0, 0, 1}), -4);
  EXPECT_EQ(elliptic_ap({PrimeField(13), 0, 0, 0, 0, 1}), 2);
  // 11a3: y^2 + y = x^3 - x^2 has a_2 = -2, a_3 = -1.
  EXPECT_EQ(elliptic_ap({PrimeField(2), 0, -1, 1, 0, 0}), -2);
  EXPECT_EQ(elliptic_ap({PrimeField(3), 0, -1, 1, 0, 0}), -1);
}

TEST(Elliptic, SingularCurveIsRejected) {
  EXPECT_THROW(elliptic_ap({PrimeField(7), 0, 0, 0, 0, 0}), InputError);
  EXPECT_THROW(elliptic_ap({PrimeField(7), 0, 0, 0, -3, 2}), InputError);
}

TEST(Elliptic, TraceAgreesWithCartierManinModP) {
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
    const PrimeField F(p);
    std::uniform_int_distribution<std::int64_t> c(0, p - 1);
    for (int it = 0; it < 5; ++it) {
      const WeierstrassCurve E{F, 0, c(rng), 0, c(rng), c(rng)};
      if (E.discriminant() == 0) continue;
      const AffineHyperellipticModel m{F, {}, {E.a6, E.a4, E.a2, 1}};
      EXPECT_EQ(F.reduce(elliptic_ap(E)), hyperelliptic_hw(m).at(0, 0)) << "p=" << p;
    }
  }
}

TEST(Elliptic, HomogenizedCubic) {
  const WeierstrassCurve E{PrimeField(11), 0, 0, 0, 0, 1};
  const PolyRing R(PrimeField(11), 3);
  EXPECT_EQ(E.homogenized(), parse_poly("y^2 z - x^3 - z^3", R, {"x", "y", "z"}));
}

TEST(BruteGradedDim, CountsStandardMonomials) {
  const PolyRing R(PrimeField(3), 3);
  const std::vector<Polynomial> lin{Polynomial::variable(R, 0)};
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(brute_graded_dim(lin, d), static_cast<std::uint64_t>(d + 1));
  EXPECT_THROW(brute_graded_dim(lin, 13), UsageError);
  const std::vector<Polynomial> cubic{parse_poly("x^3 + y^3 + z^3", R, {"x", "y", "z"})};
  for (int d = 3; d <= 12; ++d) EXPECT_EQ(brute_graded_dim(cubic, d), 3u * static_cast<std::uint64_t>(d));
}
