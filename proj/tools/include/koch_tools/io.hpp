#pragma once

// JSON encodings. Rationals are [num, den] integer pairs, lattice vectors
// [alpha, beta] (or four integers for points), keys come out sorted.

#include <string>

#include "json.hpp"
#include "koch/billiard.hpp"
#include "koch/compatibility.hpp"
#include "koch/flat_surface.hpp"
#include "koch/polygonal_paths.hpp"
#include "koch/prefractal.hpp"

namespace koch::tools {

using nlohmann::json;

json rational_pair(const Rational& q);
json point_quad(const LatticePoint& x);
json direction_json(const Direction& d);
json boundary_json(const BoundaryPoint& bp);

json prefractal_json(const Prefractal& p);
json orbit_json(const Orbit& o);

/// Per-member status, period, hybrid verdict and footprint type histogram.
json sequence_json(const CompatibleSequence& seq);

json census_json(const SurfaceCensus& s);
json tiling_json(const HexTiling& h);
json path_json(const PolygonalPath& path);
json combined_json(const CombinedPath& path);
json probe_json(const ProbeReport& r);

/// Two-space indented text with a trailing newline.
std::string dump(const json& j);

}  // namespace koch::tools
