#include <gtest/gtest.h>

#include <random>

#include "koch/errors.hpp"
#include "koch/exact_arith.hpp"
#include "oracle/oracle.hpp"

using namespace koch;

namespace {

std::pair<double, double> cart(const LatticeVector& v) { return to_cartesian(v); }

LatticeVector random_vector(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

}  // namespace

TEST(LatticeDot, BasisValues) {
  EXPECT_EQ(lattice_dot({1, 0}, {1, 0}), 1);
  EXPECT_EQ(lattice_dot({1, 0}, {0, 1}), make_rational(1, 2));
  EXPECT_EQ(lattice_dot({1, 1}, {1, 1}), 3);
}

TEST(LatticeDot, AgreesWithCartesian) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto v = random_vector(rng);
    const auto w = random_vector(rng);
    const auto [vx, vy] = cart(v);
    const auto [wx, wy] = cart(w);
    EXPECT_NEAR(lattice_dot(v, w).get_d(), vx * wx + vy * wy, 1e-9);
    EXPECT_NEAR(lattice_cross(v, w).get_d() * std::sqrt(3.0) / 2, vx * wy - vy * wx, 1e-9);
  }
}

TEST(Rotate60, Values) {
  EXPECT_EQ(rotate60({1, 0}, +1), LatticeVector(0, 1));
  EXPECT_EQ(rotate60({0, 1}, +1), LatticeVector(-1, 1));
}

TEST(Rotate60, InverseAndCartesian) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto v = random_vector(rng);
    EXPECT_EQ(rotate60(rotate60(v, +1), -1), v);
    EXPECT_EQ(rotate60(rotate60(v, -1), +1), v);
    const auto [x, y] = cart(v);
    const auto [rx, ry] = cart(rotate60(v, +1));
    const double c = 0.5, s = std::sqrt(3.0) / 2;
    EXPECT_NEAR(rx, c * x - s * y, 1e-9);
    EXPECT_NEAR(ry, s * x + c * y, 1e-9);
  }
}

TEST(Reflect, Values) {
  EXPECT_EQ(reflect_direction({1, 0}, SideOrientation::Deg0), LatticeVector(1, 0));
  EXPECT_EQ(reflect_direction({0, 1}, SideOrientation::Deg0), LatticeVector(1, -1));
}

TEST(Reflect, InvolutionAndMirrorLine) {
  std::mt19937 rng(13);
  const std::pair<SideOrientation, double> mirrors[] = {
      {SideOrientation::Deg0, 0.0},
      {SideOrientation::Deg60, std::acos(-1.0) / 3},
      {SideOrientation::Deg120, 2 * std::acos(-1.0) / 3}};
  for (int i = 0; i < 100; ++i) {
    const auto v = random_vector(rng);
    for (const auto& [m, angle] : mirrors) {
      const auto r = reflect_direction(v, m);
      EXPECT_EQ(reflect_direction(r, m), v);
      const auto [x, y] = cart(v);
      const auto [rx, ry] = cart(r);
      EXPECT_NEAR(rx, std::cos(2 * angle) * x + std::sin(2 * angle) * y, 1e-9);
      EXPECT_NEAR(ry, std::sin(2 * angle) * x - std::cos(2 * angle) * y, 1e-9);
    }
  }
}

TEST(ToCartesian, Basis) {
  const double h = std::sqrt(3.0) / 2;
  EXPECT_DOUBLE_EQ(cart({1, 0}).first, 1.0);
  EXPECT_DOUBLE_EQ(cart({1, 0}).second, 0.0);
  EXPECT_DOUBLE_EQ(cart({0, 1}).first, 0.5);
  EXPECT_NEAR(cart({0, 1}).second, h, 1e-15);
  EXPECT_DOUBLE_EQ(cart({1, 1}).first, 1.5);
  EXPECT_NEAR(cart({1, 1}).second, h, 1e-15);
}

TEST(Orientation, SidesOfTheTriangle) {
  EXPECT_EQ(orientation_of({1, 0}), SideOrientation::Deg0);
  EXPECT_EQ(orientation_of({-1, 1}), SideOrientation::Deg120);
  EXPECT_EQ(orientation_of({0, -1}), SideOrientation::Deg60);
  EXPECT_EQ(orientation_of({2, 1}), std::nullopt);
}

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(parse_rational("7/12"), make_rational(7, 12));
  EXPECT_EQ(parse_rational("-6/8"), make_rational(-3, 4));
  EXPECT_EQ(parse_rational("5"), 5);
  EXPECT_EQ(to_string(make_rational(14, 24)), "7/12");
  EXPECT_EQ(to_string(Rational(3)), "3");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
}

TEST(Primitive, ScalesToCoprimeIntegers) {
  EXPECT_EQ(primitive({make_rational(1, 2), make_rational(1, 3)}), LatticeVector(3, 2));
  EXPECT_EQ(primitive({4, -6}), LatticeVector(2, -3));
  EXPECT_TRUE(is_primitive({2, -3}));
  EXPECT_FALSE(is_primitive({4, -6}));
}
