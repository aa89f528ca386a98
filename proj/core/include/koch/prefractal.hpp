#pragma once

// Prefractal Koch snowflake polygons KS_n with exact vertices.
//
// KS_0 is the unit triangle (0,0), (1,0), (0,1) in lattice coordinates,
// traversed counterclockwise. KS_{n+1} replaces every side P->Q by
// P->A->B->C->Q, with A and C the trisection points and B the outward apex.
// Side indices are 0-based and follow the counterclockwise vertex order; a
// side runs from vertex i to vertex i+1 (mod count).

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "koch/exact_arith.hpp"

namespace koch {

inline constexpr int kDefaultLevelCap = 8;

struct Side {
  int level = 0;
  std::size_t index = 0;
  std::size_t first = 0;   // vertex index of the counterclockwise-first endpoint
  std::size_t second = 0;  // vertex index of the other endpoint
  SideOrientation orientation = SideOrientation::Deg0;
};

/// A triangle of Omega(KS_n) \ Omega(KS_{n-1}), glued onto side `parent` of KS_{n-1}.
struct Cell {
  int level = 0;
  std::size_t parent = 0;
  std::array<LatticePoint, 3> triangle;  // A, B (apex), C
};

/// A point on a side, t measured from the side's first endpoint.
struct BoundaryPoint {
  int level = 0;
  std::size_t side = 0;
  Rational t;

  bool is_vertex() const { return sgn(t) == 0 || t == 1; }
  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
    return a.level == b.level && a.side == b.side && a.t == b.t;
  }
};

class Prefractal {
 public:
  Prefractal(int level, std::vector<LatticePoint> vertices, std::vector<Cell> cells);

  int level() const { return level_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Side>& sides() const { return sides_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t side_count() const { return sides_.size(); }

  const LatticePoint& side_start(std::size_t side) const { return vertices_[sides_[side].first]; }
  const LatticePoint& side_end(std::size_t side) const { return vertices_[sides_[side].second]; }
  LatticeVector side_vector(std::size_t side) const;
  LatticePoint point_at(const BoundaryPoint& p) const;

  /// Side length is exactly 3^-n, so the perimeter is rational.
  Rational side_length() const;
  Rational perimeter() const;
  /// Twice the signed shoelace area in lattice units.
  Rational twice_signed_area() const;
  /// Area divided by the area of KS_0.
  Rational area_ratio() const;

  /// Closed point-in-polygon test (boundary counts as inside).
  bool contains(const LatticePoint& x) const;
  /// Strict interior test.
  bool contains_strictly(const LatticePoint& x) const;

  /// Double-precision copy of the side endpoints in lattice coordinates,
  /// used only to prefilter candidates before an exact decision.
  struct FloatSide {
    double a0, b0, a1, b1;
  };
  const std::vector<FloatSide>& float_sides() const { return float_sides_; }

 private:
  int winding(const LatticePoint& x, bool& on_boundary) const;

  int level_;
  std::vector<LatticePoint> vertices_;
  std::vector<Side> sides_;
  std::vector<Cell> cells_;
  std::vector<FloatSide> float_sides_;
};

/// Builds KS_n. Throws ResourceError when n exceeds `cap`, DomainError when n < 0.
Prefractal build_prefractal(int n, int cap = kDefaultLevelCap);

/// Side and fraction of a point of KS_n, or nullopt. A vertex is reported on
/// the side that starts at it (t = 0).
std::optional<BoundaryPoint> locate_on_boundary(const Prefractal& p, const LatticePoint& x);

/// The 3 * 4^(n-1) cells added at level n. Throws DomainError at level 0.
std::vector<Cell> cells_of(const Prefractal& p);

/// Whether the closed segment [a, b] meets KS_n anywhere other than at `a`.
/// Exact, with a floating-point prefilter over the sides.
bool segment_meets_boundary_beyond(const Prefractal& p, const LatticePoint& a,
                                   const LatticePoint& b);

}  // namespace koch
