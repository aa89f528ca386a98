#include "koch/prefractal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "koch/errors.hpp"

namespace koch {

namespace {

constexpr double kFloatSlack = 1e-9;

Rational power_of_three_inverse(int n) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n));
  return Rational(Integer(1), p);
}

}  // namespace

Prefractal::Prefractal(int level, std::vector<LatticePoint> vertices, std::vector<Cell> cells)
    : level_(level), vertices_(std::move(vertices)), cells_(std::move(cells)) {
  const std::size_t count = vertices_.size();
  sides_.reserve(count);
  float_sides_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Side s;
    s.level = level_;
    s.index = i;
    s.first = i;
    s.second = (i + 1) % count;
    const auto o = orientation_of(vertices_[s.second] - vertices_[s.first]);
    if (!o) throw VerificationError("side " + std::to_string(i) + " is not on a lattice line");
    s.orientation = *o;
    sides_.push_back(s);
    const auto& a = vertices_[s.first];
    const auto& b = vertices_[s.second];
    float_sides_.push_back({a.alpha.get_d(), a.beta.get_d(), b.alpha.get_d(), b.beta.get_d()});
  }
}

LatticeVector Prefractal::side_vector(std::size_t side) const {
  return side_end(side) - side_start(side);
}

LatticePoint Prefractal::point_at(const BoundaryPoint& p) const {
  if (p.side >= sides_.size()) throw DomainError("side index out of range");
  return side_start(p.side) + p.t * side_vector(p.side);
}

Rational Prefractal::side_length() const { return power_of_three_inverse(level_); }

Rational Prefractal::perimeter() const {
  return Rational(static_cast<unsigned long>(sides_.size())) * side_length();
}

Rational Prefractal::twice_signed_area() const {
  Rational sum = 0;
  const std::size_t count = vertices_.size();
  for (std::size_t i = 0; i < count; ++i) {
    sum += lattice_cross(vertices_[i], vertices_[(i + 1) % count]);
  }
  return sum;
}

// KS_0 has twice-area 1 in lattice units.
Rational Prefractal::area_ratio() const { return twice_signed_area(); }

int Prefractal::winding(const LatticePoint& x, bool& on_boundary) const {
  on_boundary = false;
  const double xb = x.beta.get_d();
  int wn = 0;
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    const auto& f = float_sides_[i];
    const double lo = std::min(f.b0, f.b1) - kFloatSlack;
    const double hi = std::max(f.b0, f.b1) + kFloatSlack;
    if (xb < lo || xb > hi) continue;
    const auto& a = side_start(i);
    const auto& b = side_end(i);
    const int left = sgn(lattice_cross(b - a, x - a));
    if (left == 0) {
      const bool in_alpha = std::min(a.alpha, b.alpha) <= x.alpha && x.alpha <= std::max(a.alpha, b.alpha);
      const bool in_beta = std::min(a.beta, b.beta) <= x.beta && x.beta <= std::max(a.beta, b.beta);
      if (in_alpha && in_beta) {
        on_boundary = true;
        return 0;
      }
    }
    if (a.beta <= x.beta) {
      if (b.beta > x.beta && left > 0) ++wn;
    } else {
      if (b.beta <= x.beta && left < 0) --wn;
    }
  }
  return wn;
}

bool Prefractal::contains(const LatticePoint& x) const {
  bool on_boundary = false;
  const int wn = winding(x, on_boundary);
  return on_boundary || wn != 0;
}

bool Prefractal::contains_strictly(const LatticePoint& x) const {
  bool on_boundary = false;
  const int wn = winding(x, on_boundary);
  return !on_boundary && wn != 0;
}

Prefractal build_prefractal(int n, int cap) {
  if (n < 0) throw DomainError("prefractal level must be nonnegative");
  if (n > cap) {
    throw ResourceError("prefractal level " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }
  std::vector<LatticePoint> vertices{LatticePoint(0, 0), LatticePoint(1, 0), LatticePoint(0, 1)};
  std::vector<Cell> cells;
  const Rational third = make_rational(1, 3);
  for (int level = 1; level <= n; ++level) {
    std::vector<LatticePoint> next;
    next.reserve(vertices.size() * 4);
    cells.clear();
    cells.reserve(vertices.size());
    const std::size_t count = vertices.size();
    for (std::size_t i = 0; i < count; ++i) {
      const LatticePoint& p = vertices[i];
      const LatticePoint& q = vertices[(i + 1) % count];
      const LatticeVector step = third * (q - p);
      LatticePoint a = p + step;
      LatticePoint c = a + step;
      LatticePoint b = a + rotate60(step, -1);
      next.push_back(p);
      next.push_back(a);
      next.push_back(b);
      next.push_back(c);
      cells.push_back(Cell{level, i, {a, b, c}});
    }
    vertices = std::move(next);
  }
  return Prefractal(n, std::move(vertices), std::move(cells));
}

std::optional<BoundaryPoint> locate_on_boundary(const Prefractal& p, const LatticePoint& x) {
  const double xa = x.alpha.get_d();
  const double xb = x.beta.get_d();
  const auto& fs = p.float_sides();
  for (std::size_t i = 0; i < p.side_count(); ++i) {
    const auto& f = fs[i];
    if (xa < std::min(f.a0, f.a1) - kFloatSlack || xa > std::max(f.a0, f.a1) + kFloatSlack) continue;
    if (xb < std::min(f.b0, f.b1) - kFloatSlack || xb > std::max(f.b0, f.b1) + kFloatSlack) continue;
    const LatticePoint& a = p.side_start(i);
    const LatticeVector d = p.side_vector(i);
    const LatticeVector rel = x - a;
    if (sgn(lattice_cross(d, rel)) != 0) continue;
    Rational t = sgn(d.alpha) != 0 ? Rational(rel.alpha / d.alpha) : Rational(rel.beta / d.beta);
    if (sgn(t) < 0 || t > 1) continue;
    if (t == 1) return BoundaryPoint{p.level(), (i + 1) % p.side_count(), Rational(0)};
    return BoundaryPoint{p.level(), i, t};
  }
  return std::nullopt;
}

std::vector<Cell> cells_of(const Prefractal& p) {
  if (p.level() == 0) throw DomainError("KS_0 has no cells");
  return p.cells();
}

bool segment_meets_boundary_beyond(const Prefractal& p, const LatticePoint& a,
                                   const LatticePoint& b) {
  if (a == b) return false;
  const LatticeVector seg = b - a;
  const double a0 = a.alpha.get_d(), b0 = a.beta.get_d();
  const double a1 = b.alpha.get_d(), b1 = b.beta.get_d();
  const auto& fs = p.float_sides();
  for (std::size_t i = 0; i < p.side_count(); ++i) {
    const auto& f = fs[i];
    if (std::max(f.a0, f.a1) < std::min(a0, a1) - kFloatSlack) continue;
    if (std::min(f.a0, f.a1) > std::max(a0, a1) + kFloatSlack) continue;
    if (std::max(f.b0, f.b1) < std::min(b0, b1) - kFloatSlack) continue;
    if (std::min(f.b0, f.b1) > std::max(b0, b1) + kFloatSlack) continue;

    const LatticePoint& c = p.side_start(i);
    const LatticeVector e = p.side_vector(i);
    const Rational denom = lattice_cross(seg, e);
    const LatticeVector ac = c - a;
    if (sgn(denom) != 0) {
      const Rational s = lattice_cross(ac, e) / denom;
      const Rational u = lattice_cross(ac, seg) / denom;
      if (sgn(s) > 0 && s <= 1 && sgn(u) >= 0 && u <= 1) return true;
      continue;
    }
    if (sgn(lattice_cross(ac, seg)) != 0) continue;  // parallel, disjoint lines
    // Collinear: project the side onto the segment parameter.
    const Rational len2 = lattice_dot(seg, seg);
    const Rational sc = lattice_dot(ac, seg) / len2;
    const Rational sd = lattice_dot(ac + e, seg) / len2;
    const Rational lo = std::max(Rational(0), Rational(std::min(sc, sd)));
    const Rational hi = std::min(Rational(1), Rational(std::max(sc, sd)));
    if (lo <= hi && sgn(hi) > 0) return true;
  }
  return false;
}

}  // namespace koch
