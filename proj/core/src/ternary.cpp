#include "koch/ternary.hpp"

#include <unordered_map>

#include "koch/errors.hpp"

namespace koch {

namespace {

constexpr char kLetters[3] = {'l', 'c', 'r'};

std::uint8_t bit_for_digit(char d) {
  switch (d) {
    case '0':
      return kL;
    case '1':
      return kC;
    default:
      return kR;
  }
}

void check_unit_interval(const Rational& t) {
  if (sgn(t) < 0 || t > 1) {
    throw DomainError("ternary address requires 0 <= t <= 1, got " + to_string(t));
  }
}

std::string letters(std::uint8_t set) {
  std::string out;
  if (set & kL) out += 'l';
  if (set & kC) out += 'c';
  if (set & kR) out += 'r';
  return out;
}

}  // namespace

TernaryExpansion expand(const Rational& t) {
  check_unit_interval(t);
  if (sgn(t) == 0) return {"", "0"};
  if (t == 1) return {"", "2"};

  Integer den = t.get_den();
  Integer reduced = den;
  int threes = 0;
  while (mpz_divisible_ui_p(reduced.get_mpz_t(), 3)) {
    reduced /= 3;
    ++threes;
  }

  if (reduced == 1) {
    // Finite expansion d_1..d_k with d_k != 0; rewrite with the all-2 tail.
    std::string digits(static_cast<std::size_t>(threes), '0');
    Integer num = t.get_num();
    for (int i = threes - 1; i >= 0; --i) {
      const unsigned long d = mpz_fdiv_ui(num.get_mpz_t(), 3);
      digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + d);
      num /= 3;
    }
    digits.back() = static_cast<char>(digits.back() - 1);
    return {digits, "2"};
  }

  std::string digits;
  std::unordered_map<std::string, std::size_t> seen;
  Integer rem = t.get_num();
  while (true) {
    const std::string key = rem.get_str(16);
    const auto it = seen.find(key);
    if (it != seen.end()) {
      return {digits.substr(0, it->second), digits.substr(it->second)};
    }
    seen.emplace(key, digits.size());
    rem *= 3;
    Integer digit = rem / den;
    rem -= digit * den;
    digits.push_back(static_cast<char>('0' + digit.get_ui()));
  }
}

TernaryType type_of(const TernaryExpansion& e) {
  TernaryType ty;
  for (char d : e.period) ty.infinite_chars |= bit_for_digit(d);
  for (char d : e.preperiod) ty.finite_chars |= bit_for_digit(d);
  ty.finite_chars &= static_cast<std::uint8_t>(~ty.infinite_chars);
  return ty;
}

TernaryType classify(const Rational& t) { return type_of(expand(t)); }

Rational evaluate(const TernaryExpansion& e) {
  auto as_integer = [](const std::string& digits) {
    Integer v = 0;
    for (char d : digits) v = v * 3 + (d - '0');
    return v;
  };
  Integer pre_scale;
  mpz_ui_pow_ui(pre_scale.get_mpz_t(), 3, e.preperiod.size());
  Integer per_scale;
  mpz_ui_pow_ui(per_scale.get_mpz_t(), 3, e.period.size());
  Rational head(as_integer(e.preperiod), pre_scale);
  Rational tail(as_integer(e.period), Integer(per_scale - 1));
  tail.canonicalize();
  head.canonicalize();
  Rational value = head + tail / Rational(pre_scale);
  return value;
}

bool is_hybrid_admissible(const TernaryType& ty) {
  struct Pattern {
    std::uint8_t infinite;
    std::uint8_t finite_bound;
  };
  static constexpr Pattern kPatterns[] = {
      {kC, kL | kR}, {kC | kL, kR}, {kC | kR, kL}, {kL | kC | kR, kNone}, {kL | kR, kNone}};
  for (const auto& p : kPatterns) {
    if (ty.infinite_chars == p.infinite && (ty.finite_chars & ~p.finite_bound) == 0) return true;
  }
  return false;
}

bool is_constancy_type(const TernaryType& ty) {
  return ty.infinite_chars == (kL | kR) && ty.finite_chars == kC;
}

bool is_noncorner_type(const TernaryType& ty) {
  return ty.infinite_chars != kL && ty.infinite_chars != kR && ty.infinite_chars != kNone;
}

bool is_cantor_point_type(const TernaryType& ty) {
  return ty.infinite_chars == (kL | kR) && ty.finite_chars == kNone;
}

Rational mirror(const Rational& t) {
  check_unit_interval(t);
  return 1 - t;
}

TernaryType mirror(const TernaryType& ty) {
  auto swap_lr = [](std::uint8_t s) {
    std::uint8_t out = s & kC;
    if (s & kL) out |= kR;
    if (s & kR) out |= kL;
    return out;
  };
  return {swap_lr(ty.infinite_chars), swap_lr(ty.finite_chars)};
}

std::string to_string(const TernaryType& ty) {
  const std::string fin = ty.finite_chars == kNone ? "\u2205" : letters(ty.finite_chars);
  return "[" + letters(ty.infinite_chars) + "," + fin + "]";
}

TernaryType parse_ternary_type(const std::string& text) {
  const auto open = text.find('[');
  const auto comma = text.find(',');
  const auto close = text.find(']');
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
      !(open < comma && comma < close)) {
    throw DomainError("malformed ternary type '" + text + "'");
  }
  auto parse_set = [&](const std::string& part) {
    std::uint8_t s = kNone;
    if (part == "\u2205" || part == "0" || part.empty()) return s;
    for (char ch : part) {
      if (ch == 'l') s |= kL;
      else if (ch == 'c') s |= kC;
      else if (ch == 'r') s |= kR;
      else if (ch != ' ') throw DomainError("malformed ternary type '" + text + "'");
    }
    return s;
  };
  TernaryType ty{parse_set(text.substr(open + 1, comma - open - 1)),
                 parse_set(text.substr(comma + 1, close - comma - 1))};
  if (ty.infinite_chars == kNone || (ty.infinite_chars & ty.finite_chars) != 0) {
    throw DomainError("invalid ternary type '" + text + "'");
  }
  return ty;
}

std::string to_string(const TernaryExpansion& e) {
  std::string out;
  for (char d : e.preperiod) out += kLetters[d - '0'];
  for (char d : e.period) {
    out += kLetters[d - '0'];
    out += "\u0305";
  }
  return out;
}

std::string to_ascii(const TernaryExpansion& e) {
  std::string out;
  for (char d : e.preperiod) out += kLetters[d - '0'];
  out += '(';
  for (char d : e.period) out += kLetters[d - '0'];
  out += ')';
  return out;
}

}  // namespace koch
