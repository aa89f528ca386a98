#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_set>

#include "koch/billiard.hpp"
#include "koch/errors.hpp"

namespace koch {

namespace {

// Affine map x -> L x + T in lattice coordinates.
struct Affine {
  std::array<Rational, 4> l{1, 0, 0, 1};  // row-major
  LatticeVector t{0, 0};

  LatticeVector linear(const LatticeVector& v) const {
    return {Rational(l[0] * v.alpha + l[1] * v.beta), Rational(l[2] * v.alpha + l[3] * v.beta)};
  }
  LatticePoint operator()(const LatticePoint& x) const { return linear(x) + t; }
};

std::array<Rational, 4> reflection_matrix(SideOrientation o) {
  switch (o) {
    case SideOrientation::Deg0:
      return {1, 1, 0, -1};
    case SideOrientation::Deg60:
      return {-1, 0, 1, 1};
    default:
      return {0, -1, -1, 0};
  }
}

// m o (reflection across the line through `a` with orientation `o`).
Affine compose_reflection(const Affine& m, const LatticePoint& a, SideOrientation o) {
  const auto f = reflection_matrix(o);
  Affine r;
  r.l = f;
  r.t = a - r.linear(a);
  Affine out;
  out.l = {Rational(m.l[0] * f[0] + m.l[1] * f[2]), Rational(m.l[0] * f[1] + m.l[1] * f[3]),
           Rational(m.l[2] * f[0] + m.l[3] * f[2]), Rational(m.l[2] * f[1] + m.l[3] * f[3])};
  out.t = m.linear(r.t) + m.t;
  return out;
}

// Parameter s with b - a = s * d, when b - a is a positive multiple of d.
Rational leg_parameter(const LatticeVector& d, const LatticeVector& delta) {
  if (sgn(lattice_cross(d, delta)) != 0) throw VerificationError("leg is not parallel to its direction");
  const Rational s = sgn(d.alpha) != 0 ? Rational(delta.alpha / d.alpha) : Rational(delta.beta / d.beta);
  if (sgn(s) <= 0) throw VerificationError("leg runs against its direction");
  return s;
}

}  // namespace

UnfoldedOrbit unfold_orbit(const Prefractal& p, const Orbit& o) {
  if (!o.is_periodic()) throw DomainError("only periodic orbits unfold to closed segments");
  const auto& fp = o.footprint;
  const std::size_t period = fp.size();
  const LatticePoint x0 = p.point_at(fp.front().point);
  const LatticeVector theta0 = fp.front().direction;
  Affine copy;
  Rational total = 0;
  for (std::size_t i = 0; i < period; ++i) {
    const FootprintPoint& here = fp[i];
    const FootprintPoint& next = fp[(i + 1) % period];
    const LatticePoint a = p.point_at(here.point);
    const LatticePoint b = p.point_at(next.point);
    total += leg_parameter(here.direction, b - a);
    if (copy.linear(here.direction) != theta0) {
      throw VerificationError("unfolded leg " + std::to_string(i) + " is not parallel to the first");
    }
    if (copy(b) != x0 + total * theta0) {
      throw VerificationError("unfolded leg " + std::to_string(i) + " does not continue the line");
    }
    copy = compose_reflection(copy, b, p.sides()[next.point.side].orientation);
  }
  return UnfoldedOrbit{p.level(), x0, x0 + total * theta0, period};
}

namespace {

// Triangles of the scale-3^-n lattice, in coordinates multiplied by 3^n.
// Up(i, j): X >= i, Y >= j, X + Y <= i + j + 1.
// Down(i, j): X <= i + 1, Y <= j + 1, X + Y >= i + j + 1.
struct Tri {
  long i = 0;
  long j = 0;
  bool up = true;
};

class TriangleSet {
 public:
  explicit TriangleSet(int n) {
    scale_ = 1;
    for (int k = 0; k < n; ++k) scale_ *= 3;
    add_triangle({0, 0}, {scale_, 0}, {0, scale_});
    for (int level = 1; level <= n; ++level) {
      const Prefractal q = build_prefractal(level, std::max(level, kDefaultLevelCap));
      for (const Cell& c : q.cells()) {
        std::array<std::array<long, 2>, 3> v;
        for (int k = 0; k < 3; ++k) {
          const Rational a = c.triangle[k].alpha * scale_;
          const Rational b = c.triangle[k].beta * scale_;
          v[k] = {a.get_num().get_si(), b.get_num().get_si()};
        }
        add_triangle(v[0], v[1], v[2]);
      }
    }
  }

  long scale() const { return scale_; }
  bool contains(const Tri& t) const { return set_.count(key(t)) != 0; }

 private:
  std::int64_t key(const Tri& t) const {
    const std::int64_t span = 4 * scale_ + 8;
    return ((t.i + 2 * scale_ + 4) * span + (t.j + 2 * scale_ + 4)) * 2 + (t.up ? 1 : 0);
  }

  void add_triangle(std::array<long, 2> a, std::array<long, 2> b, std::array<long, 2> c) {
    const long lo_i = std::min({a[0], b[0], c[0]}) - 1, hi_i = std::max({a[0], b[0], c[0]});
    const long lo_j = std::min({a[1], b[1], c[1]}) - 1, hi_j = std::max({a[1], b[1], c[1]});
    auto cross = [](std::array<long, 2> o, std::array<long, 2> p, long x, long y) {
      return (3 * p[0] - 3 * o[0]) * (y - 3 * o[1]) - (3 * p[1] - 3 * o[1]) * (x - 3 * o[0]);
    };
    for (long i = lo_i; i <= hi_i; ++i) {
      for (long j = lo_j; j <= hi_j; ++j) {
        for (bool up : {true, false}) {
          const long x = up ? 3 * i + 1 : 3 * i + 2;
          const long y = up ? 3 * j + 1 : 3 * j + 2;
          const long s0 = cross(a, b, x, y), s1 = cross(b, c, x, y), s2 = cross(c, a, x, y);
          const bool inside = (s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0);
          if (inside) set_.insert(key({i, j, up}));
        }
      }
    }
  }

  long scale_ = 1;
  std::unordered_set<std::int64_t> set_;
};

enum class Edge { X, Y, XY };

struct Constraint {
  Edge edge;
  int sign;  // sign * g(P) >= sign * c
  long c;
};

std::array<Constraint, 3> constraints(const Tri& t) {
  if (t.up) return {{{Edge::X, 1, t.i}, {Edge::Y, 1, t.j}, {Edge::XY, -1, t.i + t.j + 1}}};
  return {{{Edge::X, -1, t.i + 1}, {Edge::Y, -1, t.j + 1}, {Edge::XY, 1, t.i + t.j + 1}}};
}

Rational g(Edge e, const LatticeVector& v) {
  switch (e) {
    case Edge::X:
      return v.alpha;
    case Edge::Y:
      return v.beta;
    default:
      return v.alpha + v.beta;
  }
}

Tri neighbour(const Tri& t, Edge e) {
  if (t.up) {
    switch (e) {
      case Edge::X:
        return {t.i - 1, t.j, false};
      case Edge::Y:
        return {t.i, t.j - 1, false};
      default:
        return {t.i, t.j, false};
    }
  }
  switch (e) {
    case Edge::X:
      return {t.i + 1, t.j, true};
    case Edge::Y:
      return {t.i, t.j + 1, true};
    default:
      return {t.i, t.j, true};
  }
}

SideOrientation orientation_of_edge(Edge e) {
  switch (e) {
    case Edge::X:
      return SideOrientation::Deg60;
    case Edge::Y:
      return SideOrientation::Deg0;
    default:
      return SideOrientation::Deg120;
  }
}

struct Exit {
  bool valid = false;       // the closed triangle contains f and the ray enters it
  Rational param;           // where the ray leaves
  std::vector<Edge> edges;  // edges attaining the exit (two means a vertex)
};

Exit exit_of(const Tri& t, const LatticePoint& f, const LatticeVector& d) {
  Exit out;
  std::optional<Rational> hi;
  for (const auto& c : constraints(t)) {
    const Rational value = c.sign * (g(c.edge, f) - c.c);
    const Rational rate = c.sign * g(c.edge, d);
    if (sgn(value) < 0) return out;
    if (sgn(rate) >= 0) {
      if (sgn(rate) == 0 && sgn(value) == 0) return out;  // running along the edge
      continue;
    }
    const Rational s = value / (-rate);
    if (!hi || s < *hi) {
      hi = s;
      out.edges = {c.edge};
    } else if (s == *hi) {
      out.edges.push_back(c.edge);
    }
  }
  if (!hi || sgn(*hi) <= 0) return out;
  out.valid = true;
  out.param = *hi;
  return out;
}

}  // namespace

Orbit fold_segment(const Prefractal& p, const LatticePoint& start, const LatticePoint& end) {
  const auto start_bp = locate_on_boundary(p, start);
  if (!start_bp || start_bp->is_vertex()) {
    throw DomainError("segment must start in the interior of a side");
  }
  if (start == end) throw DomainError("empty segment");
  const TriangleSet tris(p.level());
  const Rational scale(tris.scale());
  const LatticeVector theta = primitive(end - start);
  const InitialCondition init = make_initial_condition(p, *start_bp, Direction::exact(theta));

  LatticePoint f = scale * start;
  LatticeVector d = scale * (end - start);
  Rational remaining = 1;

  std::optional<Tri> current;
  std::optional<Exit> current_exit;
  const long fi = static_cast<long>(mpz_class(f.alpha.get_num() / f.alpha.get_den()).get_si());
  const long fj = static_cast<long>(mpz_class(f.beta.get_num() / f.beta.get_den()).get_si());
  for (long i = fi - 2; i <= fi + 1 && !current; ++i) {
    for (long j = fj - 2; j <= fj + 1 && !current; ++j) {
      for (bool up : {true, false}) {
        const Tri t{i, j, up};
        if (!tris.contains(t)) continue;
        Exit e = exit_of(t, f, d);
        if (e.valid) {
          current = t;
          current_exit = std::move(e);
          break;
        }
      }
    }
  }
  if (!current) throw DomainError("segment does not enter the table");

  Orbit orbit{p.level(), init, {}, Truncated{0}};
  orbit.footprint.push_back(FootprintPoint{*start_bp, theta});
  while (true) {
    Exit e = current_exit ? std::move(*current_exit) : exit_of(*current, f, d);
    current_exit.reset();
    if (!e.valid) throw VerificationError("triangle walk lost the segment");
    if (e.param >= remaining) {
      f = f + remaining * d;
      break;
    }
    f = f + e.param * d;
    remaining -= e.param;
    if (e.edges.size() > 1) {
      throw VertexCollision("segment passes through lattice vertex " +
                            to_string((1 / scale) * f));
    }
    const Tri next = neighbour(*current, e.edges.front());
    if (tris.contains(next)) {
      current = next;
      continue;
    }
    d = reflect_direction(d, orientation_of_edge(e.edges.front()));
    const auto bp = locate_on_boundary(p, (1 / scale) * f);
    if (!bp) throw VerificationError("reflection edge is not on the boundary");
    orbit.footprint.push_back(FootprintPoint{*bp, primitive(d)});
  }

  const LatticePoint finish = (1 / scale) * f;
  const FootprintPoint& first = orbit.footprint.front();
  const LatticeVector closing =
      primitive(reflect_direction(d, p.sides()[first.point.side].orientation));
  if (finish == start && closing == first.direction) {
    std::size_t period = orbit.footprint.size();
    for (std::size_t k = 1; k < orbit.footprint.size(); ++k) {
      if (orbit.footprint[k] == first) {
        period = k;
        break;
      }
    }
    orbit.footprint.resize(period);
    orbit.status = Periodic{period};
  } else {
    orbit.status = Truncated{orbit.footprint.size()};
  }
  return orbit;
}

}  // namespace koch
