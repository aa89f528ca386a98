#include "koch/exact_arith.hpp"

#include <cmath>
#include <string>

#include "koch/errors.hpp"

namespace koch {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw DomainError("malformed fraction '" + std::string(whole) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw DomainError("malformed fraction '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  return make_rational(parse_integer(text.substr(0, slash), text),
                       parse_integer(text.substr(slash + 1), text));
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::size_t hash_value(const Rational& q) {
  const std::size_t h1 = std::hash<std::string>{}(q.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(q.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::string_view to_string(SideOrientation o) {
  switch (o) {
    case SideOrientation::Deg0:
      return "Deg0";
    case SideOrientation::Deg60:
      return "Deg60";
    case SideOrientation::Deg120:
      return "Deg120";
  }
  return "?";
}

std::string to_string(const LatticeVector& v) {
  return "(" + to_string(v.alpha) + ", " + to_string(v.beta) + ")";
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const {
  const std::size_t a = hash_value(v.alpha);
  return a ^ (hash_value(v.beta) * 1099511628211ULL);
}

Rational lattice_dot(const LatticeVector& v, const LatticeVector& w) {
  Rational cross_terms = v.alpha * w.beta + v.beta * w.alpha;
  return v.alpha * w.alpha + v.beta * w.beta + cross_terms / 2;
}

Rational squared_length(const LatticeVector& v) {
  return v.alpha * v.alpha + v.alpha * v.beta + v.beta * v.beta;
}

Rational lattice_cross(const LatticeVector& v, const LatticeVector& w) {
  return v.alpha * w.beta - v.beta * w.alpha;
}

LatticeVector rotate60(const LatticeVector& v, int sign) {
  if (sign > 0) return {Rational(-v.beta), Rational(v.alpha + v.beta)};
  return {Rational(v.alpha + v.beta), Rational(-v.alpha)};
}

LatticeVector reflect_direction(const LatticeVector& v, SideOrientation orientation) {
  switch (orientation) {
    case SideOrientation::Deg0:
      return {Rational(v.alpha + v.beta), Rational(-v.beta)};
    case SideOrientation::Deg60:
      return {Rational(-v.alpha), Rational(v.alpha + v.beta)};
    case SideOrientation::Deg120:
      return {Rational(-v.beta), Rational(-v.alpha)};
  }
  return v;
}

std::optional<SideOrientation> orientation_of(const LatticeVector& v) {
  if (v.is_zero()) return std::nullopt;
  if (sgn(v.beta) == 0) return SideOrientation::Deg0;
  if (sgn(v.alpha) == 0) return SideOrientation::Deg60;
  if (v.alpha + v.beta == 0) return SideOrientation::Deg120;
  return std::nullopt;
}

std::pair<double, double> to_cartesian(const LatticeVector& v) {
  const double a = v.alpha.get_d();
  const double b = v.beta.get_d();
  return {a + 0.5 * b, b * (std::sqrt(3.0) / 2.0)};
}

LatticeVector primitive(const LatticeVector& v) {
  if (v.is_zero()) throw DomainError("zero vector has no direction");
  Integer l;
  mpz_lcm(l.get_mpz_t(), v.alpha.get_den_mpz_t(), v.beta.get_den_mpz_t());
  Integer a = v.alpha.get_num() * (l / v.alpha.get_den());
  Integer b = v.beta.get_num() * (l / v.beta.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {Rational(Integer(a / g)), Rational(Integer(b / g))};
}

bool is_primitive(const LatticeVector& v) {
  if (v.is_zero()) return false;
  if (v.alpha.get_den() != 1 || v.beta.get_den() != 1) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), v.alpha.get_num_mpz_t(), v.beta.get_num_mpz_t());
  return g == 1;
}

}  // namespace koch
