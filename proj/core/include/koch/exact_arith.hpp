#pragma once

// Exact scalar and vector kernel over the triangular lattice.
//
// Every position and direction is a pair (alpha, beta) meaning
// alpha*u1 + beta*u2 with u1 = (1, 0) and u2 = (1/2, sqrt(3)/2). Lengths,
// angles and orientations are decided from rational quantities only; the
// factor sqrt(3)/2 that relates lattice and Cartesian cross products is
// positive and never needed for a sign.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace koch {

using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(long num, long den);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q", "p" or a decimal-free integer pair. Throws DomainError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

std::size_t hash_value(const Rational& q);

/// The three line classes of the triangular lattice, by angle mod 180 degrees.
enum class SideOrientation { Deg0, Deg60, Deg120 };

std::string_view to_string(SideOrientation o);

struct LatticeVector {
  Rational alpha;
  Rational beta;

  LatticeVector() = default;
  LatticeVector(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {}
  LatticeVector(long a, long b) : alpha(a), beta(b) {}

  bool is_zero() const { return sgn(alpha) == 0 && sgn(beta) == 0; }

  friend bool operator==(const LatticeVector& v, const LatticeVector& w) {
    return v.alpha == w.alpha && v.beta == w.beta;
  }
  friend bool operator!=(const LatticeVector& v, const LatticeVector& w) { return !(v == w); }

  friend LatticeVector operator+(const LatticeVector& v, const LatticeVector& w) {
    return {Rational(v.alpha + w.alpha), Rational(v.beta + w.beta)};
  }
  friend LatticeVector operator-(const LatticeVector& v, const LatticeVector& w) {
    return {Rational(v.alpha - w.alpha), Rational(v.beta - w.beta)};
  }
  friend LatticeVector operator-(const LatticeVector& v) {
    return {Rational(-v.alpha), Rational(-v.beta)};
  }
  friend LatticeVector operator*(const Rational& k, const LatticeVector& v) {
    return {Rational(k * v.alpha), Rational(k * v.beta)};
  }
};

using LatticePoint = LatticeVector;

std::string to_string(const LatticeVector& v);

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const;
};

/// Euclidean inner product: |u1| = |u2| = 1 and u1.u2 = 1/2.
Rational lattice_dot(const LatticeVector& v, const LatticeVector& w);

/// Squared Euclidean length, alpha^2 + alpha*beta + beta^2.
Rational squared_length(const LatticeVector& v);

/// alpha_v*beta_w - beta_v*alpha_w. The Cartesian cross product equals this
/// times sqrt(3)/2, so the two share a sign.
Rational lattice_cross(const LatticeVector& v, const LatticeVector& w);

/// Rotation by +60 degrees (sign = +1) or -60 degrees (sign = -1).
LatticeVector rotate60(const LatticeVector& v, int sign);

/// Reflection of a direction through a line of the given orientation.
LatticeVector reflect_direction(const LatticeVector& v, SideOrientation orientation);

/// Orientation class of a nonzero vector lying on a lattice line, if any.
std::optional<SideOrientation> orientation_of(const LatticeVector& v);

/// Double-precision Cartesian coordinates. Rendering only.
std::pair<double, double> to_cartesian(const LatticeVector& v);

/// Positive rescaling to coprime integer coefficients. Throws DomainError on 0.
LatticeVector primitive(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

}  // namespace koch
