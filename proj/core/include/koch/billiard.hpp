#pragma once

// The billiard map on Omega(KS_n), decided exactly.
//
// A state is a basepoint on a side together with the outgoing (inward)
// direction. Directions are primitive integer lattice vectors; reflections in
// the three side orientations are unimodular, so primitivity is preserved
// along an orbit and states can be compared structurally.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "koch/exact_arith.hpp"
#include "koch/prefractal.hpp"

namespace koch {

/// Marker for a direction outside Q*u1 + Q*u2. The angle (radians, Cartesian)
/// exists for rendering only and never reaches the exact kernel.
struct SymbolicIrrational {
  std::string tag;
  double angle = 0.0;
};

class Direction {
 public:
  /// Stores the primitive form of `v`.
  static Direction exact(const LatticeVector& v);
  static Direction irrational(std::string tag, double angle);

  bool is_exact() const { return std::holds_alternative<LatticeVector>(value_); }
  const LatticeVector& vector() const;
  const SymbolicIrrational& symbolic() const;
  Direction reversed() const;
  std::string describe() const;

  friend bool operator==(const Direction& a, const Direction& b);

 private:
  explicit Direction(std::variant<LatticeVector, SymbolicIrrational> v) : value_(std::move(v)) {}
  std::variant<LatticeVector, SymbolicIrrational> value_;
};

struct InitialCondition {
  BoundaryPoint point;
  Direction direction;
};

/// Validates that `point` is not a vertex and that `direction` points
/// strictly into the table. Throws DomainError (DegenerateRay when grazing).
InitialCondition make_initial_condition(const Prefractal& p, BoundaryPoint point,
                                        Direction direction);

/// Basepoint plus outgoing direction.
struct FootprintPoint {
  BoundaryPoint point;
  LatticeVector direction;

  friend bool operator==(const FootprintPoint& a, const FootprintPoint& b) {
    return a.point == b.point && a.direction == b.direction;
  }
};

struct Periodic {
  std::size_t period = 0;
};
struct Singular {
  std::size_t forward_corner = 0;   // vertex index
  std::size_t backward_corner = 0;  // vertex index
};
struct Truncated {
  std::size_t steps = 0;
};
struct DenseByDirection {};

using OrbitStatus = std::variant<Periodic, Singular, Truncated, DenseByDirection>;

std::string status_name(const OrbitStatus& s);

struct Orbit {
  int level = 0;
  InitialCondition initial;
  /// Periodic: the p states starting at the initial one. Singular: the whole
  /// saddle connection in travel order, corners excluded (they live in the
  /// status). Truncated: the visited prefix.
  std::vector<FootprintPoint> footprint;
  OrbitStatus status;

  bool is_periodic() const { return std::holds_alternative<Periodic>(status); }
  bool is_singular() const { return std::holds_alternative<Singular>(status); }
  bool is_closed() const { return is_periodic() || is_singular(); }
  std::size_t period() const;
};

struct SideInterior {
  BoundaryPoint point;
};
struct Corner {
  std::size_t vertex = 0;
};

struct Hit {
  LatticePoint point;
  Rational distance;  // ray parameter in units of the direction vector
  std::variant<SideInterior, Corner> where;

  bool is_corner() const { return std::holds_alternative<Corner>(where); }
};

/// First boundary point strictly after `from` along `dir`. Throws
/// DegenerateRay when the ray starts out running along a side, DomainError
/// when it leaves the table without meeting the boundary.
Hit cast_ray(const Prefractal& p, const LatticePoint& from, const LatticeVector& dir);

struct CornerHit {
  std::size_t vertex = 0;
  LatticePoint point;
};

using StepResult = std::variant<FootprintPoint, CornerHit>;

/// One application of the billiard map.
StepResult billiard_step(const Prefractal& p, const FootprintPoint& state);

inline constexpr std::size_t kDefaultMaxSteps = 1'000'000;

Orbit run_orbit(const Prefractal& p, const InitialCondition& init,
                std::size_t max_steps = kDefaultMaxSteps);

enum class DirectionClass { Closed, Dense };

DirectionClass classify_direction(const Direction& d);

/// Basepoints whose address is a corner address (tail constantly l or r),
/// counted once per distinct point; a saddle connection adds its two corners.
std::size_t hybrid_failures(const Orbit& o);

/// At most two failing basepoints. Throws DomainError for Truncated or
/// DenseByDirection orbits.
bool is_hybrid(const Orbit& o);

/// Verdict on whatever footprint has been computed, for truncated runs.
bool is_hybrid_prefix(const Orbit& o);

/// Whether the state reverses the incoming direction (a perpendicular hit).
bool is_perpendicular(const Prefractal& p, const FootprintPoint& state);

struct UnfoldedOrbit {
  int level = 0;
  LatticePoint start;
  LatticePoint end;
  std::size_t copies = 0;
};

/// Straightens a periodic orbit by reflecting the table across each side
/// it meets. Throws DomainError unless the orbit is Periodic.
UnfoldedOrbit unfold_orbit(const Prefractal& p, const Orbit& o);

/// Reduces a straight segment, starting on KS_n and pointing inward, into a
/// billiard trajectory by walking the scale-n triangle tiling of
/// Omega(KS_n). Throws VertexCollision when the segment passes through a
/// scale-n lattice vertex before its end.
Orbit fold_segment(const Prefractal& p, const LatticePoint& start, const LatticePoint& end);

}  // namespace koch
