#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hwfrob;
using hwfrob::testing::load_fixture;

TEST(Koszul, IndicesAreLexOrderedSubsets) {
  const auto J = koszul_indices(4, 2);
  ASSERT_EQ(J.size(), 6u);
  EXPECT_EQ(J.front().indices, (std::vector<int>{0, 1}));
  EXPECT_EQ(J.back().indices, (std::vector<int>{2, 3}));
  EXPECT_TRUE(std::is_sorted(J.begin(), J.end()));
  EXPECT_EQ(koszul_indices(3, 0).size(), 1u);
  EXPECT_TRUE(koszul_indices(3, 4).empty());
}

TEST(Koszul, ComplexResolvesACompleteIntersection) {
  const auto s = load_fixture("X0_67.txt");
  const auto K = koszul_complex(s.generators);
  const auto R = K.as_resolution();
  EXPECT_EQ(R.length(), 3);
  EXPECT_TRUE(is_complex(R));
  EXPECT_EQ(K.module(2).twists, (std::vector<int>{4, 4, 4}));
  EXPECT_EQ(K.module(3).twists, std::vector<int>{6});
  for (int d = 0; d <= 12; ++d) {
    EXPECT_EQ(resolution_hilbert_sum(R, d), static_cast<std::int64_t>(brute_graded_dim(s.generators, d)));
  }
}

TEST(Koszul, LiftCommutesWithTheFrobeniusTwist) {
  for (const auto& name : {"X0_67.txt", "fermat_cubic.txt", "fermat_quartic.txt"}) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      const auto s = load_fixture(name, p);
      const auto R = koszul_complex(s.generators).as_resolution();
      const auto Rp = frobenius_resolution(R);
      EXPECT_EQ(Rp.maps, koszul_power_complex(s.generators, static_cast<int>(p)).maps);
      EXPECT_TRUE(lift_commutes(koszul_lift(s.generators, static_cast<int>(p)), Rp, R)) << name << " p=" << p;
    }
  }
}

TEST(Koszul, RegularSequenceDetection) {
  const PolyRing R(PrimeField(5), 4);
  const std::vector<std::string> v{"x", "y", "z", "w"};
  auto P = [&](const char* s) { return parse_poly(s, R, v); };
  EXPECT_TRUE(is_regular_sequence(std::vector<Polynomial>{P("x^2"), P("y^2"), P("z*w")}, 3));
  EXPECT_FALSE(is_regular_sequence(std::vector<Polynomial>{P("x^2"), P("x*y")}, 3));
  EXPECT_FALSE(is_regular_sequence(std::vector<Polynomial>{P("x*z - y^2"), P("x*w - y*z"), P("y*w - z^2")}, 3));
  EXPECT_TRUE(is_regular_sequence(load_fixture("X0_67.txt").generators, 4));
  EXPECT_THROW(is_regular_sequence(std::vector<Polynomial>{P("x + 1")}, 3), InputError);
}

TEST(Koszul, KrullDimension) {
  const PolyRing R(PrimeField(3), 4);
  const std::vector<std::string> v{"x", "y", "z", "w"};
  auto P = [&](const char* s) { return parse_poly(s, R, v); };
  EXPECT_EQ(krull_dimension(std::vector<Polynomial>{P("x"), P("y")}), 2);
  EXPECT_EQ(krull_dimension(std::vector<Polynomial>{P("x*y")}), 3);
  EXPECT_EQ(krull_dimension(std::vector<Polynomial>{P("x*z - y^2"), P("x*w - y*z"), P("y*w - z^2")}), 2);
  EXPECT_EQ(krull_dimension(std::vector<Polynomial>{P("x"), P("x + 1")}), -1);
  EXPECT_EQ(krull_dimension(load_fixture("X0_23.txt").generators), 2);
}
