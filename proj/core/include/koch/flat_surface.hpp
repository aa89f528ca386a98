#pragma once

// Combinatorial invariants of the translation surface glued from six
// reflected copies of Omega(KS_n).

#include <cstddef>
#include <vector>

#include "koch/exact_arith.hpp"
#include "koch/prefractal.hpp"

namespace koch {

struct AngleCensus {
  std::size_t acute = 0;   // interior angle pi/3
  std::size_t reflex = 0;  // interior angle 4pi/3
};

/// Throws VerificationError if any vertex has a third angle.
AngleCensus vertex_angle_census(const Prefractal& p);

struct ConePoints {
  long long multiple = 1;  // cone angle in units of 2pi
  long long count = 0;
};

struct SurfaceCensus {
  int level = 0;
  long long euler_characteristic = 0;  // from the vertex census and denominators
  long long euler_from_angles = 0;     // Gauss-Bonnet over the cone points
  long long genus = 0;
  std::vector<ConePoints> cone_points;
  AngleCensus angles;
  long long cover_degree = 0;
  int num_copies = 6;
};

SurfaceCensus surface_census(int n, int cap = kDefaultLevelCap);

struct HexSingularity {
  std::size_t vertex = 0;
  LatticePoint point;
  std::size_t triangles = 0;  // scale-k triangles of one copy meeting at the vertex
  bool centered = false;
};

struct HexTiling {
  int level = 0;
  int scale = 0;
  int copies = 6;
  std::size_t triangle_count = 0;
  Rational tiled_twice_area;
  bool area_matches = false;
  std::vector<LatticePoint> centers;  // hexagon centers meeting one copy
  std::vector<HexSingularity> singularities;
  bool all_centered = false;
};

/// Tiles Omega(KS_n) by triangles of side 3^-k, k > n, grouped into hexagons.
HexTiling hex_tiling(int n, int k, int cap = kDefaultLevelCap);

struct CoverReport {
  int level = 0;
  long long degree = 0;
  long long ramification_sum = 0;
  bool riemann_hurwitz_ok = false;
};

/// Degree of the cover over the hexagonal torus built on H_{n+1}, and the
/// ramification identity. Throws VerificationError on a non-integral degree.
CoverReport cover_consistency(int n, int cap = kDefaultLevelCap);

}  // namespace koch
