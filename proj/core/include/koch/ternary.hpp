#pragma once

// Base-3 addresses of side fractions over the alphabet {l, c, r}
// (digits 0, 1, 2). Rationals have eventually periodic expansions; the
// canonical form never ends in a period of zeros except for t = 0, so
// ternary rationals m/3^k take the all-r tail.

#include <cstdint>
#include <string>

#include "koch/exact_arith.hpp"

namespace koch {

struct TernaryExpansion {
  std::string preperiod;  // digits '0'..'2'
  std::string period;     // nonempty, digits '0'..'2'

  friend bool operator==(const TernaryExpansion&, const TernaryExpansion&) = default;
};

/// Bit set over {l, c, r}.
enum CharSet : std::uint8_t { kNone = 0, kL = 1, kC = 2, kR = 4 };

struct TernaryType {
  std::uint8_t infinite_chars = kNone;
  std::uint8_t finite_chars = kNone;

  friend bool operator==(const TernaryType&, const TernaryType&) = default;
};

/// Throws DomainError unless 0 <= t <= 1.
TernaryExpansion expand(const Rational& t);
TernaryType classify(const Rational& t);
TernaryType type_of(const TernaryExpansion& e);

/// Evaluates the series back to a rational.
Rational evaluate(const TernaryExpansion& e);

/// The five literal patterns [c,lr], [cl,r], [cr,l], [lcr,0], [lr,0]; the
/// second coordinate of a pattern bounds the finitely occurring characters.
bool is_hybrid_admissible(const TernaryType& ty);

/// [lr, c]: infinitely many l and r, finitely many (and at least one) c.
bool is_constancy_type(const TernaryType& ty);

/// Not a corner address: anything whose tail is not constant l or constant r.
bool is_noncorner_type(const TernaryType& ty);

/// [lr, 0]. Vertices (t in {0, 1}) have types [l,0] / [r,0] and never qualify.
bool is_cantor_point_type(const TernaryType& ty);

/// Convention bridge: the address measured from the opposite endpoint.
Rational mirror(const Rational& t);

/// Exchanges l and r in both coordinates.
TernaryType mirror(const TernaryType& ty);

/// "[lr,c]", "[c,∅]", characters in l, c, r order.
std::string to_string(const TernaryType& ty);
/// Parses the notation produced by to_string; accepts "0" or "" for the empty set.
TernaryType parse_ternary_type(const std::string& text);

/// Characters with a combining overline on the period, e.g. "lr̄".
std::string to_string(const TernaryExpansion& e);
/// ASCII form with the period in parentheses, e.g. "l(r)".
std::string to_ascii(const TernaryExpansion& e);

}  // namespace koch
