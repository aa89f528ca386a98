#pragma once

// Reference computations for the tests. Everything here works in plain
// Cartesian long doubles or machine integers and shares no code with the
// library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Point = std::complex<long double>;

inline const long double kSqrt3 = std::sqrt(3.0L);

inline Point lattice(long double a, long double b) { return {a + b / 2, b * kSqrt3 / 2}; }

/// Koch polygon by the textbook rule: split each side in thirds and raise an
/// outward bump (clockwise turn for a counterclockwise polygon).
inline std::vector<Point> koch(int n) {
  std::vector<Point> v{{0, 0}, {1, 0}, {0.5L, kSqrt3 / 2}};
  const Point turn = std::polar(1.0L, -std::acos(-1.0L) / 3);
  for (int k = 0; k < n; ++k) {
    std::vector<Point> next;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point p = v[i];
      const Point q = v[(i + 1) % v.size()];
      const Point a = p + (q - p) / 3.0L;
      const Point c = p + 2.0L * (q - p) / 3.0L;
      next.insert(next.end(), {p, a, a + (c - a) * turn, c});
    }
    v = std::move(next);
  }
  return v;
}

inline long double shoelace(const std::vector<Point>& v) {
  long double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point p = v[i];
    const Point q = v[(i + 1) % v.size()];
    s += p.real() * q.imag() - q.real() * p.imag();
  }
  return s / 2;
}

inline long double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

struct RayHit {
  Point point;
  std::size_t side;
  long double u;  // position along the side
  long double s;  // ray parameter
};

/// First side met by from + s*dir, s > eps, skipping `skip`.
inline std::optional<RayHit> trace(const std::vector<Point>& v, Point from, Point dir,
                                   std::optional<std::size_t> skip = std::nullopt) {
  std::optional<RayHit> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (skip && *skip == i) continue;
    const Point p = v[i];
    const Point e = v[(i + 1) % v.size()] - p;
    const long double den = cross(dir, e);
    if (std::abs(den) < 1e-18L) continue;
    const long double s = cross(p - from, e) / den;
    const long double u = cross(p - from, dir) / den;
    if (s <= 1e-12L || u < -1e-12L || u > 1 + 1e-12L) continue;
    if (!best || s < best->s) best = RayHit{from + s * dir, i, u, s};
  }
  return best;
}

inline Point reflect(Point dir, Point side) {
  const Point t = side / std::abs(side);
  // Mirror across the line spanned by t.
  return t * t * std::conj(dir);
}

struct Bounce {
  Point point;
  std::size_t side;
  long double u;
};

struct Trajectory {
  std::vector<Bounce> bounces;  // starting with the seed
  bool closed = false;          // returned to the seed state
  bool corner = false;          // met a vertex
};

/// Billiard in the Koch polygon from `start` on side `side`.
inline Trajectory billiard(const std::vector<Point>& v, std::size_t side, long double u, Point dir,
                           std::size_t max_steps = 100000) {
  Trajectory out;
  const Point start = v[side] + u * (v[(side + 1) % v.size()] - v[side]);
  const Point d0 = dir / std::abs(dir);
  out.bounces.push_back({start, side, u});
  Point x = start;
  Point d = d0;
  std::size_t at = side;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const auto hit = trace(v, x, d, at);
    if (!hit) return out;
    if (hit->u < 1e-9L || hit->u > 1 - 1e-9L) {
      out.corner = true;
      return out;
    }
    d = reflect(d, v[(hit->side + 1) % v.size()] - v[hit->side]);
    x = hit->point;
    at = hit->side;
    if (std::abs(x - start) < 1e-9L && std::abs(d - d0) < 1e-9L) {
      out.closed = true;
      return out;
    }
    out.bounces.push_back({x, at, hit->u});
  }
  return out;
}

/// Base-3 digits of p/q (0 <= p <= q) by long division; a terminating
/// expansion is rewritten to end in repeated 2s, and 1 is 0.222...
struct Digits {
  std::string preperiod;
  std::string period;
};

inline Digits base3(std::int64_t p, std::int64_t q) {
  if (p == q) return {"", "2"};
  if (p == 0) return {"", "0"};
  std::string digits;
  std::map<std::int64_t, std::size_t> seen;
  std::int64_t r = p;
  while (!seen.count(r)) {
    seen[r] = digits.size();
    r *= 3;
    digits.push_back(static_cast<char>('0' + r / q));
    r %= q;
  }
  Digits d{digits.substr(0, seen[r]), digits.substr(seen[r])};
  if (d.period == "0") {
    std::string pre = d.preperiod;
    while (!pre.empty() && pre.back() == '0') pre.pop_back();
    pre.back() = static_cast<char>(pre.back() - 1);
    d = {pre, "2"};
  }
  return d;
}

/// Characters occurring infinitely / finitely often, as sorted "lcr" subsets.
inline std::pair<std::string, std::string> type_of(const Digits& d) {
  auto chars = [](const std::string& s) {
    std::string out;
    for (char c : std::string("012")) {
      if (s.find(c) != std::string::npos) out += "lcr"[c - '0'];
    }
    return out;
  };
  const std::string inf = chars(d.period);
  std::string fin;
  for (char c : chars(d.preperiod)) {
    if (inf.find(c) == std::string::npos) fin += c;
  }
  return {inf, fin};
}

/// Does the line through (x0, 0) with lattice direction (a, b) pass through a
/// point of (3^-k Z)^2 with coordinates bounded by `limit` (in 3^-k units)?
/// x0 = num/den. Returns the first witness found.
inline std::optional<std::pair<std::int64_t, std::int64_t>> lattice_hit(std::int64_t num, std::int64_t den,
                                                                         std::int64_t a, std::int64_t b,
                                                                         int k, std::int64_t limit) {
  std::int64_t scale = 1;
  for (int i = 0; i < k; ++i) scale *= 3;
  // Point (P, Q)/scale on the line: (P/scale - x0) * b == (Q/scale) * a.
  // Multiply by scale*den: (P*den - num*scale) * b == Q*a*den.
  for (std::int64_t qn = -limit; qn <= limit; ++qn) {
    for (std::int64_t pn = -limit; pn <= limit; ++pn) {
      if ((pn * den - num * scale) * b == qn * a * den) return std::make_pair(pn, qn);
    }
  }
  return std::nullopt;
}

}  // namespace oracle
