#include "koch/billiard.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "koch/errors.hpp"
#include "koch/ternary.hpp"

namespace koch {

Direction Direction::exact(const LatticeVector& v) { return Direction(primitive(v)); }

Direction Direction::irrational(std::string tag, double angle) {
  return Direction(SymbolicIrrational{std::move(tag), angle});
}

const LatticeVector& Direction::vector() const {
  if (!is_exact()) throw DomainError("symbolic irrational direction has no lattice vector");
  return std::get<LatticeVector>(value_);
}

const SymbolicIrrational& Direction::symbolic() const {
  if (is_exact()) throw DomainError("exact direction is not symbolic");
  return std::get<SymbolicIrrational>(value_);
}

Direction Direction::reversed() const {
  if (is_exact()) return Direction(-vector());
  const auto& s = symbolic();
  return Direction(SymbolicIrrational{s.tag + "+pi", s.angle + M_PI});
}

std::string Direction::describe() const {
  if (is_exact()) return to_string(vector());
  return "irrational(" + symbolic().tag + ")";
}

bool operator==(const Direction& a, const Direction& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.vector() == b.vector();
  return a.symbolic().tag == b.symbolic().tag;
}

InitialCondition make_initial_condition(const Prefractal& p, BoundaryPoint point,
                                        Direction direction) {
  if (point.level != p.level()) throw DomainError("basepoint level does not match the table");
  if (point.side >= p.side_count()) throw DomainError("side index out of range");
  if (sgn(point.t) < 0 || point.t > 1) throw DomainError("side fraction outside [0, 1]");
  if (point.is_vertex()) throw DomainError("initial basepoint is a vertex");
  const LatticeVector side = p.side_vector(point.side);
  if (direction.is_exact()) {
    const int s = sgn(lattice_cross(side, direction.vector()));
    if (s == 0) throw DegenerateRay("initial direction runs along the side");
    if (s < 0) throw DomainError("initial direction points out of the table");
  } else {
    const auto [sx, sy] = to_cartesian(side);
    const double dx = std::cos(direction.symbolic().angle);
    const double dy = std::sin(direction.symbolic().angle);
    if (sx * dy - sy * dx <= 0.0) throw DomainError("initial direction points out of the table");
  }
  return InitialCondition{std::move(point), std::move(direction)};
}

std::string status_name(const OrbitStatus& s) {
  struct {
    std::string operator()(const Periodic&) const { return "Periodic"; }
    std::string operator()(const Singular&) const { return "Singular"; }
    std::string operator()(const Truncated&) const { return "Truncated"; }
    std::string operator()(const DenseByDirection&) const { return "DenseByDirection"; }
  } visitor;
  return std::visit(visitor, s);
}

std::size_t Orbit::period() const {
  if (!is_periodic()) throw DomainError("orbit is not periodic");
  return std::get<Periodic>(status).period;
}

namespace {

constexpr double kParamSlack = 1e-9;
constexpr double kOrderSlack = 1e-7;

struct Candidate {
  double s;
  std::size_t side;
};

}  // namespace

Hit cast_ray(const Prefractal& p, const LatticePoint& from, const LatticeVector& dir) {
  if (dir.is_zero()) throw DomainError("zero ray direction");
  const double pa = from.alpha.get_d();
  const double pb = from.beta.get_d();
  double da = dir.alpha.get_d();
  double db = dir.beta.get_d();
  const double norm = std::hypot(da, db);
  da /= norm;
  db /= norm;

  std::vector<Candidate> candidates;
  const auto& fs = p.float_sides();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& f = fs[i];
    const double ea = f.a1 - f.a0;
    const double eb = f.b1 - f.b0;
    const double ra = f.a0 - pa;
    const double rb = f.b0 - pb;
    const double den = da * eb - db * ea;
    const double elen = std::hypot(ea, eb);
    if (std::abs(den) <= 1e-12 * elen) {
      if (std::abs(ra * db - rb * da) > kParamSlack) continue;
      const double s0 = ra * da + rb * db;
      const double s1 = (f.a1 - pa) * da + (f.b1 - pb) * db;
      if (std::max(s0, s1) < -kParamSlack) continue;
      candidates.push_back({std::max(0.0, std::min(s0, s1)), i});
      continue;
    }
    const double s = (ra * eb - rb * ea) / den;
    const double u = (ra * db - rb * da) / den;
    if (s < -kParamSlack || u < -kParamSlack || u > 1.0 + kParamSlack) continue;
    candidates.push_back({s, i});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.s < b.s; });

  std::optional<Rational> best_s;
  double best_sf = 0.0;
  std::optional<Hit> best;
  for (const auto& cand : candidates) {
    if (best && cand.s > best_sf + kOrderSlack) break;
    const LatticePoint& a = p.side_start(cand.side);
    const LatticeVector e = p.side_vector(cand.side);
    const LatticeVector rel = a - from;
    const Rational den = lattice_cross(dir, e);
    if (sgn(den) == 0) {
      if (sgn(lattice_cross(rel, dir)) != 0) continue;
      const Rational len2 = lattice_dot(dir, dir);
      const Rational s0 = lattice_dot(rel, dir) / len2;
      const Rational s1 = lattice_dot(rel + e, dir) / len2;
      const Rational lo = std::min(s0, s1);
      const Rational hi = std::max(s0, s1);
      if (sgn(hi) <= 0) continue;
      if (sgn(lo) <= 0) throw DegenerateRay("ray runs along side " + std::to_string(cand.side));
      // Touches the side's nearer endpoint first: a corner contact.
      if (!best_s || lo < *best_s) {
        const std::size_t vertex = s0 < s1 ? p.sides()[cand.side].first : p.sides()[cand.side].second;
        best_s = lo;
        best_sf = cand.s;
        best = Hit{from + lo * dir, lo, Corner{vertex}};
      }
      continue;
    }
    const Rational s = lattice_cross(rel, e) / den;
    if (sgn(s) <= 0) continue;
    const Rational u = lattice_cross(rel, dir) / den;
    if (sgn(u) < 0 || u > 1) continue;
    if (best_s && s >= *best_s) {
      continue;
    }
    best_s = s;
    best_sf = cand.s;
    const Side& side = p.sides()[cand.side];
    if (sgn(u) == 0) {
      best = Hit{a, s, Corner{side.first}};
    } else if (u == 1) {
      best = Hit{p.side_end(cand.side), s, Corner{side.second}};
    } else {
      best = Hit{from + s * dir, s, SideInterior{BoundaryPoint{p.level(), cand.side, u}}};
    }
  }
  if (!best) throw DomainError("ray from " + to_string(from) + " never meets the boundary");
  return *best;
}

StepResult billiard_step(const Prefractal& p, const FootprintPoint& state) {
  const LatticeVector side = p.side_vector(state.point.side);
  const int s = sgn(lattice_cross(side, state.direction));
  if (s == 0) throw DegenerateRay("direction runs along the basepoint's side");
  if (s < 0) throw DomainError("direction points out of the table");
  const Hit hit = cast_ray(p, p.point_at(state.point), state.direction);
  if (const auto* corner = std::get_if<Corner>(&hit.where)) {
    return CornerHit{corner->vertex, hit.point};
  }
  const BoundaryPoint& bp = std::get<SideInterior>(hit.where).point;
  return FootprintPoint{bp, reflect_direction(state.direction, p.sides()[bp.side].orientation)};
}

namespace {

// The time-reversed state at the same basepoint.
FootprintPoint reversed_state(const Prefractal& p, const FootprintPoint& s) {
  return FootprintPoint{s.point,
                        -reflect_direction(s.direction, p.sides()[s.point.side].orientation)};
}

}  // namespace

Orbit run_orbit(const Prefractal& p, const InitialCondition& init, std::size_t max_steps) {
  if (max_steps < 1) throw DomainError("max_steps must be at least 1");
  Orbit orbit{p.level(), init, {}, Truncated{0}};
  if (!init.direction.is_exact()) {
    orbit.status = DenseByDirection{};
    return orbit;
  }
  const FootprintPoint start{init.point, init.direction.vector()};
  orbit.footprint.push_back(start);
  FootprintPoint current = start;
  for (std::size_t step = 1; step <= max_steps; ++step) {
    StepResult next = billiard_step(p, current);
    if (const auto* corner = std::get_if<CornerHit>(&next)) {
      const std::size_t forward_corner = corner->vertex;
      std::vector<FootprintPoint> backward;
      FootprintPoint back = reversed_state(p, start);
      for (std::size_t k = 1; k <= max_steps; ++k) {
        StepResult prev = billiard_step(p, back);
        if (const auto* bc = std::get_if<CornerHit>(&prev)) {
          std::vector<FootprintPoint> full;
          full.reserve(backward.size() + orbit.footprint.size());
          for (auto it = backward.rbegin(); it != backward.rend(); ++it) {
            full.push_back(reversed_state(p, *it));
          }
          full.insert(full.end(), orbit.footprint.begin(), orbit.footprint.end());
          orbit.footprint = std::move(full);
          orbit.status = Singular{forward_corner, bc->vertex};
          return orbit;
        }
        back = std::get<FootprintPoint>(prev);
        backward.push_back(back);
      }
      orbit.status = Truncated{max_steps};
      return orbit;
    }
    FootprintPoint& state = std::get<FootprintPoint>(next);
    if (state == start) {
      orbit.status = Periodic{orbit.footprint.size()};
      return orbit;
    }
    orbit.footprint.push_back(state);
    current = std::move(state);
  }
  orbit.status = Truncated{max_steps};
  return orbit;
}

DirectionClass classify_direction(const Direction& d) {
  return d.is_exact() ? DirectionClass::Closed : DirectionClass::Dense;
}

namespace {

std::size_t count_failures(const std::vector<FootprintPoint>& footprint) {
  std::set<std::pair<std::size_t, std::string>> seen;
  std::size_t failures = 0;
  for (const auto& fp : footprint) {
    if (!seen.emplace(fp.point.side, fp.point.t.get_str()).second) continue;
    if (fp.point.is_vertex() || !is_noncorner_type(classify(fp.point.t))) ++failures;
  }
  return failures;
}

}  // namespace

std::size_t hybrid_failures(const Orbit& o) {
  std::size_t failures = count_failures(o.footprint);
  if (o.is_singular()) failures += 2;
  return failures;
}

bool is_hybrid(const Orbit& o) {
  if (!o.is_closed()) {
    throw DomainError("hybrid verdict needs a finite footprint; orbit is " + status_name(o.status));
  }
  return hybrid_failures(o) <= 2;
}

bool is_hybrid_prefix(const Orbit& o) { return hybrid_failures(o) <= 2; }

bool is_perpendicular(const Prefractal& p, const FootprintPoint& state) {
  const LatticeVector incoming =
      reflect_direction(state.direction, p.sides()[state.point.side].orientation);
  return incoming == -state.direction;
}

}  // namespace koch
