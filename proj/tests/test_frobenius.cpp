#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hwfrob;
using hwfrob::testing::load_fixture;

namespace {

/// The same variety with variables renamed by `perm` (x_i -> x_perm[i]).
ProblemSpec permute_variables(const ProblemSpec& s, const std::vector<int>& perm) {
  ProblemSpec out = s;
  out.generators.clear();
  for (const auto& f : s.generators) {
    std::vector<Term> t;
    for (const auto& term : f.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < perm.size(); ++i) m.exp[static_cast<std::size_t>(perm[i])] = term.mono.exp[i];
      t.push_back({m, term.coeff});
    }
    out.generators.push_back(Polynomial::from_terms(s.ring, std::move(t)));
  }
  return out;
}

}  // namespace

TEST(AlgorithmI, X023AtFive) {
  const auto s = load_fixture("X0_23.txt");
  const auto rep = algorithm_I(s);
  EXPECT_EQ(rep.algorithm_used, "general");
  EXPECT_EQ(rep.h_dim, 2);
  EXPECT_EQ(rep.rank, 2);
  EXPECT_EQ(rep.char_poly, (std::vector<std::uint32_t>{1, 2, 1}));
  EXPECT_EQ(rep.D, 7);
  ASSERT_TRUE(rep.alpha.has_value());
  ASSERT_EQ(rep.basis.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    ASSERT_EQ(rep.basis[k].size(), 1u);
    EXPECT_EQ(rep.basis[k][0].second.slot, static_cast<int>(k) + 1);
    EXPECT_EQ(rep.basis[k][0].second.exponents, (std::vector<int>{-1, -1, -1, -1, -1}));
  }
}

TEST(AlgorithmI, MinimalResolutionGivesTheSameInvariants) {
  auto s = load_fixture("X0_23.txt", 7);
  s.shape = ResolutionShape::minimal;
  const auto rep = algorithm_I(s);
  EXPECT_EQ(rep.char_poly, (std::vector<std::uint32_t>{1, 5, 3}));
  EXPECT_EQ(rep.rank, 2);
  EXPECT_EQ(rep.D, 2);
}

TEST(AlgorithmII, X067MatchesThePrintedMatrix) {
  const auto s = load_fixture("X0_67.txt");
  const auto rep = dispatch(s);
  EXPECT_EQ(rep.algorithm_used, "ci");
  const auto want = FpMatrix::from_rows(s.ring.field, {{1, 1, 0, 0, 0}, {2, 0, 2, 0, 0}, {0, 2, 1, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 0}});
  EXPECT_EQ(rep.matrix, want);
  EXPECT_EQ(rep.rank, 3);
  EXPECT_EQ(rep.char_poly, (std::vector<std::uint32_t>{1, 1, 1, 0, 0, 0}));
  EXPECT_EQ(rep.D, 5);
  EXPECT_FALSE(rep.alpha.has_value());
  EXPECT_EQ(rep.assumptions.size(), 1u);
}

TEST(AlgorithmI, KoszulInjectionReproducesTheCompleteIntersectionMatrix) {
  const auto s = load_fixture("X0_67.txt");
  EXPECT_EQ(algorithm_I_with(s, koszul_step_a(s)).matrix, algorithm_II(s).matrix);
}

TEST(AlgorithmI, GeneralPathOnACompleteIntersection) {
  auto s = load_fixture("X0_67.txt");
  s.algorithm = AlgorithmChoice::general;
  const auto rep = dispatch(s);
  EXPECT_EQ(rep.algorithm_used, "general");
  EXPECT_EQ(rep.h_dim, 5);
  EXPECT_EQ(rep.rank, 3);
  EXPECT_EQ(rep.char_poly, (std::vector<std::uint32_t>{1, 1, 1, 0, 0, 0}));
}

TEST(Dispatch, PicksTheApplicablePath) {
  EXPECT_EQ(dispatch(load_fixture("X0_23.txt", 3)).algorithm_used, "general");
  EXPECT_EQ(dispatch(load_fixture("fermat_quartic.txt")).algorithm_used, "ci");
  auto s = load_fixture("X0_23.txt", 3);
  s.algorithm = AlgorithmChoice::complete_intersection;
  EXPECT_THROW(dispatch(s), DispatchError);
  EXPECT_TRUE(complete_intersection_violation(s).has_value());
}

TEST(Dispatch, RejectsOutOfRangeQ) {
  auto s = load_fixture("X0_23.txt");
  s.q = 4;
  EXPECT_THROW(dispatch(s), InputError);
  s.q = 0;
  EXPECT_THROW(dispatch(s), InputError);
}

TEST(AlgorithmI, RationalCurveHasZeroCohomology) {
  const auto s = parse_problem("p = 7\nvars = x y z\nq = 1\nalgorithm = general\npoly = x^2 + y^2 + z^2\n");
  const auto rep = dispatch(s);
  EXPECT_EQ(rep.h_dim, 0);
  EXPECT_EQ(rep.rank, 0);
  EXPECT_EQ(rep.char_poly, std::vector<std::uint32_t>{1});
}

TEST(AlgorithmI, SurfaceInP3) {
  // H^1 of a smooth quartic surface vanishes; H^2 is one-dimensional.
  const auto s = parse_problem("p = 5\nvars = x y z w\nq = 2\nalgorithm = general\npoly = x^4 + y^4 + z^4 + w^4\n");
  const auto rep = dispatch(s);
  EXPECT_EQ(rep.h_dim, 1);
  EXPECT_EQ(rep.char_poly, (std::vector<std::uint32_t>{1, 1}));
  auto s1 = s;
  s1.q = 1;
  EXPECT_EQ(dispatch(s1).h_dim, 0);
}

TEST(Invariance, MonomialOrderAndShape) {
  for (const auto& name : hwfrob::testing::fixture_names()) {
    auto s = load_fixture(name, 3);
    s.algorithm = AlgorithmChoice::general;
    const auto base = dispatch(s);
    auto lex = s;
    lex.order = MonomialOrder::lex(s.ring.nvars);
    lex.shape = ResolutionShape::minimal;
    const auto other = dispatch(lex);
    EXPECT_EQ(other.rank, base.rank) << name;
    EXPECT_EQ(other.char_poly, base.char_poly) << name;
    auto minimal = s;
    minimal.shape = ResolutionShape::minimal;
    EXPECT_EQ(dispatch(minimal).char_poly, base.char_poly) << name;
  }
}

TEST(Invariance, VariableAndGeneratorPermutation) {
  for (const auto& name : hwfrob::testing::fixture_names()) {
    auto s = load_fixture(name, 5);
    s.algorithm = AlgorithmChoice::general;
    const auto base = dispatch(s);
    std::vector<int> perm(static_cast<std::size_t>(s.ring.nvars));
    for (int i = 0; i < s.ring.nvars; ++i) perm[static_cast<std::size_t>(i)] = s.ring.nvars - 1 - i;
    auto t = permute_variables(s, perm);
    std::reverse(t.generators.begin(), t.generators.end());
    const auto rep = dispatch(t);
    EXPECT_EQ(rep.rank, base.rank) << name;
    EXPECT_EQ(rep.char_poly, base.char_poly) << name;
  }
}

TEST(Invariance, BasisPermutationConjugatesTheMatrix) {
  const auto rep = algorithm_II(load_fixture("X0_67.txt"));
  const PrimeField& F = rep.matrix.field();
  const int n = rep.matrix.rows();
  FpMatrix P(F, n, n);
  for (int i = 0; i < n; ++i) P.set(i, (i + 2) % n, 1);
  const FpMatrix conj = fp_multiply(fp_multiply(fp_transpose(P), rep.matrix), P);
  EXPECT_EQ(fp_charpoly(conj), rep.char_poly);
  EXPECT_EQ(fp_rank(conj), rep.rank);
}
