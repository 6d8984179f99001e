#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hwfrob;
using hwfrob::testing::random_poly;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

Polynomial P(const std::string& s, const PolyRing& R) { return parse_poly(s, R, kXYZ); }

}  // namespace

TEST(Polynomial, CanonicalFormDropsZeros) {
  const PolyRing R(PrimeField(5), 3);
  const auto f = P("x + 4*x + y", R);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.terms()[0].mono, Monomial::variable(1));
  EXPECT_TRUE(P("x*y - y*x", R).is_zero());
}

TEST(Polynomial, TermsAreGrevlexDescending) {
  const PolyRing R(PrimeField(7), 3);
  const auto f = P("z^2 + x*z + y^2 + x^2 + x*y + y*z", R);
  const auto ord = MonomialOrder::grevlex(3);
  for (std::size_t i = 1; i < f.size(); ++i) {
    EXPECT_EQ(monomial_cmp(f.terms()[i - 1].mono, f.terms()[i].mono, ord), std::strong_ordering::greater);
  }
  EXPECT_EQ(f.terms()[0].mono, Monomial::from_exponents(std::vector<int>{2, 0, 0}));
}

TEST(Polynomial, LeadingTermRespectsOrder) {
  const PolyRing R(PrimeField(7), 3);
  const auto f = P("x*z^2 + y^3", R);
  EXPECT_EQ(f.leading_term(MonomialOrder::grevlex(3)).mono, Monomial::from_exponents(std::vector<int>{0, 3, 0}));
  EXPECT_EQ(f.leading_term(MonomialOrder::lex(3)).mono, Monomial::from_exponents(std::vector<int>{1, 0, 2}));
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(7);
  const PolyRing R(PrimeField(13), 3);
  for (int it = 0; it < 50; ++it) {
    const auto a = random_poly(rng, R, 6, 4);
    const auto b = random_poly(rng, R, 6, 4);
    const auto c = random_poly(rng, R, 6, 4);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(poly_neg(poly_neg(a)), a);
  }
}

TEST(Polynomial, HomogeneityAndDegreeClass) {
  const PolyRing R(PrimeField(5), 3);
  EXPECT_EQ(poly_degree_check(P("x^2 + y*z", R)).kind, DegreeClass::Kind::homogeneous);
  EXPECT_EQ(poly_degree_check(P("x^2 + y", R)).kind, DegreeClass::Kind::inhomogeneous);
  EXPECT_EQ(poly_degree_check(P("0", R)).kind, DegreeClass::Kind::zero);
  EXPECT_EQ(poly_degree_check(P("x^2 + y*z", R)).degree, 2);
}

TEST(Polynomial, CoefficientQuery) {
  const PolyRing R(PrimeField(5), 3);
  const auto f = P("3*x^2*y - z^3", R);
  EXPECT_EQ(poly_coeff(f, std::vector<int>{2, 1, 0}).value, 3u);
  EXPECT_EQ(poly_coeff(f, std::vector<int>{0, 0, 3}).value, 4u);
  EXPECT_EQ(poly_coeff(f, std::vector<int>{1, 1, 1}).value, 0u);
  EXPECT_THROW(poly_coeff(f, std::vector<int>{1, 1}), UsageError);
}

TEST(Polynomial, PowerMatchesBinaryExponentiation) {
  std::mt19937_64 rng(11);
  const PolyRing R(PrimeField(3), 3);
  for (int it = 0; it < 20; ++it) {
    const auto f = random_poly(rng, R, 4, 3);
    for (std::uint64_t e : {0u, 1u, 2u, 5u, 9u, 10u}) EXPECT_EQ(poly_pow(f, e), poly_pow_binary(f, e));
  }
}

TEST(Polynomial, PthPowerEqualsFrobeniusTwistOnRandomInputs) {
  std::mt19937_64 rng(2024);
  const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11};
  for (int it = 0; it < 100; ++it) {
    const std::uint32_t p = primes[static_cast<std::size_t>(it) % primes.size()];
    const PolyRing R(PrimeField(p), 4);
    const auto f = random_poly(rng, R, 5, 3);
    EXPECT_EQ(poly_pow_binary(f, p), poly_frob_twist(f)) << "p=" << p << " f=" << f;
  }
}

TEST(Polynomial, MixedRingsAreRejected) {
  const PolyRing R5(PrimeField(5), 3);
  const PolyRing R7(PrimeField(7), 3);
  EXPECT_THROW(P("x", R5) + P("x", R7), UsageError);
}

TEST(Monomial, DegreeIndexerEnumeratesAllMonomials) {
  for (auto ord : {MonomialOrder::grevlex(4), MonomialOrder::lex(4)}) {
    for (int d = 0; d <= 5; ++d) {
      DegreeIndexer ix(ord, d);
      ASSERT_EQ(ix.size(), monomial_count(4, d));
      Monomial m = ix.first();
      Monomial prev = m;
      for (std::uint64_t k = 0; k < ix.size(); ++k) {
        EXPECT_EQ(ix.rank(m), k);
        EXPECT_EQ(m.degree(), d);
        if (k > 0) {
          EXPECT_EQ(monomial_cmp(prev, m, ord), std::strong_ordering::greater);
        }
        prev = m;
        ix.next(m);
      }
    }
  }
}

TEST(Monomial, Binomials) {
  EXPECT_EQ(binom(5, 2), 10u);
  EXPECT_EQ(binom(3, 5), 0u);
  EXPECT_EQ(binom(-1, 2), 0u);
  EXPECT_EQ(monomial_count(3, 2), 6u);
  EXPECT_EQ(monomial_count(3, -1), 0u);
}
