#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace hwfrob;
using hwfrob::testing::load_fixture;
using hwfrob::testing::random_poly;

namespace {

const std::vector<std::string> kVars{"X0", "X1", "X2", "X3", "Y"};

std::size_t error_position(const std::string& s, const PolyRing& R, const std::vector<std::string>& v) {
  try {
    parse_poly(s, R, v);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for '" << s << "'";
  return 0;
}

}  // namespace

TEST(ParsePoly, DisplayedGeneratorWithParentheses) {
  const PolyRing R(PrimeField(5), 5);
  const auto f = parse_poly("Y^2 + (-X3 - X1 - X0)*Y + 2*X3*X2 + 3*X1^2 - 2*X1*X0 + 2*X0^2", R, kVars);
  auto v = [&](int i) { return Polynomial::variable(R, i); };
  auto c = [&](std::int64_t k) { return Polynomial::constant(R, k); };
  const auto want = v(4) * v(4) - (v(3) + v(1) + v(0)) * v(4) + c(2) * v(3) * v(2) + c(3) * v(1) * v(1) -
                    c(2) * v(1) * v(0) + c(2) * v(0) * v(0);
  EXPECT_EQ(f, want);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_EQ(f.size(), 8u);
}

TEST(ParsePoly, TrivialInputs) {
  const PolyRing R(PrimeField(7), 3);
  const std::vector<std::string> v{"x", "y", "z"};
  EXPECT_TRUE(parse_poly("0", R, v).is_zero());
  EXPECT_TRUE(parse_poly("x - x", R, v).is_zero());
  EXPECT_TRUE(parse_poly("7*x", R, v).is_zero());
}

TEST(ParsePoly, JuxtapositionAndPrecedence) {
  const PolyRing R(PrimeField(11), 5);
  const std::vector<std::string> v{"x", "y", "z", "v", "w"};
  auto P = [&](const char* s) { return parse_poly(s, R, v); };
  EXPECT_EQ(P("5 v z - 2 w x"), P("5*v*z - 2*w*x"));
  EXPECT_EQ(P("2x"), P("2*x"));
  EXPECT_EQ(P("-x^2"), P("-(x^2)"));
  EXPECT_EQ(P("--x"), P("x"));
  EXPECT_EQ(P("2^3 x"), P("8*x"));
  EXPECT_EQ(P("(x + y)(x - y)"), P("x^2 - y^2"));
  EXPECT_EQ(P("x y^2"), P("x*(y^2)"));
  EXPECT_EQ(P("x^0"), P("1"));
  EXPECT_EQ(P("  x\t+\ny "), P("x+y"));
  EXPECT_EQ(P("123456789012345678901234567890 x"), P("7 x"));
}

TEST(ParsePoly, PositionedErrors) {
  const PolyRing R(PrimeField(5), 5);
  const std::vector<std::string> v{"x", "y", "z", "v", "w"};
  EXPECT_EQ(error_position("vz", R, v), 0u);
  EXPECT_EQ(error_position("5 v z + q", R, v), 8u);
  EXPECT_EQ(error_position("x^", R, v), 2u);
  EXPECT_EQ(error_position("x^-1", R, v), 2u);
  EXPECT_EQ(error_position("x^y", R, v), 2u);
  EXPECT_EQ(error_position("(x + y", R, v), 0u);
  EXPECT_EQ(error_position("x + y)", R, v), 5u);
  EXPECT_EQ(error_position("x $ y", R, v), 2u);
  EXPECT_EQ(error_position("", R, v), 0u);
  EXPECT_EQ(error_position("x +", R, v), 3u);
  EXPECT_EQ(error_position("x^99999", R, v), 2u);
  EXPECT_EQ(error_position(std::string(500, '(') + "x" + std::string(500, ')'), R, v) > 0, true);
}

TEST(ParsePoly, UnknownIdentifierMessage) {
  const PolyRing R(PrimeField(5), 2);
  try {
    parse_poly("vz", R, {"v", "z"});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown identifier 'vz'"), std::string::npos);
  }
}

TEST(ParsePoly, RoundTripOnFixturesAndRandomInputs) {
  for (const auto& name : hwfrob::testing::fixture_names()) {
    const auto s = load_fixture(name);
    for (const auto& f : s.generators) EXPECT_EQ(parse_poly(format_poly(f, s.var_names), s.ring, s.var_names), f);
  }
  std::mt19937_64 rng(77);
  const PolyRing R(PrimeField(13), 5);
  for (int it = 0; it < 200; ++it) {
    const auto f = random_poly(rng, R, 6, 5);
    EXPECT_EQ(parse_poly(format_poly(f, kVars), R, kVars), f);
  }
}

TEST(ParsePoly, FuzzedInputsYieldValueOrPositionedError) {
  std::mt19937_64 rng(99);
  const std::string alphabet = "xyzXY0123456789+-*^() \t_$";
  const PolyRing R(PrimeField(7), 3);
  const std::vector<std::string> v{"x", "y", "z"};
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  int values = 0, errors = 0;
  for (int it = 0; it < 20000; ++it) {
    std::string s;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) s += alphabet[pick(rng)];
    try {
      const auto f = parse_poly(s, R, v);
      EXPECT_EQ(parse_poly(format_poly(f, v), R, v), f) << s;
      ++values;
    } catch (const ParseError& e) {
      EXPECT_LE(e.position(), s.size()) << s;
      ++errors;
    }
  }
  EXPECT_GT(values, 100);
  EXPECT_GT(errors, 100);
}

TEST(ParseProblem, X023Fixture) {
  const auto s = load_fixture("X0_23.txt");
  EXPECT_EQ(s.r(), 4);
  EXPECT_EQ(s.generators.size(), 4u);
  EXPECT_EQ(s.q, 1);
  EXPECT_EQ(s.p(), 5u);
  EXPECT_EQ(s.var_names, kVars);
  EXPECT_EQ(s.algorithm, AlgorithmChoice::automatic);
}

namespace {

std::string problem_error(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParseProblem, Errors) {
  const std::string tail = "vars = x y z\nq = 1\npoly = x^3 + y^3 + z^3\n";
  EXPECT_NE(problem_error("p = 4\n" + tail).find("p must be prime"), std::string::npos);
  EXPECT_NE(problem_error("p = 1\n" + tail).find("p must be prime"), std::string::npos);
  EXPECT_NE(problem_error("p = 5\nvars = x y z\nq = 1\npoly = x^2 + x\n").find("term 'x'"), std::string::npos);
  EXPECT_NE(problem_error("p = 5\nvars = x y z\npoly = x^3\n").find("missing key 'q'"), std::string::npos);
  EXPECT_NE(problem_error("vars = x y z\nq = 1\npoly = x^3\n").find("missing key 'p'"), std::string::npos);
  EXPECT_NE(problem_error("p = 5\nvars = x y z\nq = 1\n").find("missing key 'poly'"), std::string::npos);
  EXPECT_NE(problem_error("p = 5\np = 7\n" + tail).find("duplicate key 'p'"), std::string::npos);
  EXPECT_NE(problem_error("p = 5\ncolour = red\n" + tail).find("unknown key"), std::string::npos);
  EXPECT_NE(problem_error("p = 5\nvars = x y z\nq = 2\npoly = x^3 + y^3 + z^3\n").find("q must satisfy"), std::string::npos);
  EXPECT_NE(problem_error("p = 5\nvars = x x z\nq = 1\npoly = x^3\n").find("duplicate variable"), std::string::npos);
  EXPECT_NE(problem_error("p = 5\nvars = x y z\nq = 1\nalgorithm = fast\npoly = x^3\n").find("algorithm"), std::string::npos);
  EXPECT_THROW(parse_problem("p = 5\nvars = x y z\nq = 1\npoly = x^3 + w\n"), ParseError);
}

TEST(ParseProblem, CommentsAutoQAndOverrides) {
  const auto s = parse_problem(
      "# comment\np = 7   # trailing\nvars = x, y, z\nq = auto\norder = lex\nresolution = minimal\npoly = x^3 + y^3 + z^3\n");
  EXPECT_EQ(s.q, 1);
  EXPECT_EQ(s.order.kind(), OrderKind::lex);
  EXPECT_EQ(s.shape, ResolutionShape::minimal);
  EXPECT_EQ(parse_problem(hwfrob::testing::read_fixture("X0_23.txt"), 13).p(), 13u);
  auto x023 = hwfrob::testing::read_fixture("X0_23.txt");
  x023.replace(x023.find("q = 1"), 5, "q = auto");
  EXPECT_EQ(parse_problem(x023).q, 1);
}
