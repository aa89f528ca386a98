#pragma once

// Polygonal paths through Cantor-point basepoints of a compatible sequence.
//
// The anchor is the first Cantor basepoint met when following the seed
// orbit. Each later level contributes a basepoint of type [lr,0] on a side
// created at that level, and the deepest level one whose address repeats c.
// Vertices are picked nearest first, backtracking so that every gap is
// shorter than the one before; when no such chain exists the plain nearest
// chain is used.

#include <optional>
#include <vector>

#include "koch/billiard.hpp"
#include "koch/compatibility.hpp"
#include "koch/ternary.hpp"

namespace koch {

struct PathVertex {
  int level = 0;
  BoundaryPoint point;
  LatticePoint position;
  TernaryType type;
};

struct LimitEstimate {
  LatticePoint point;  // exact, but only an estimate of the limit
  double x = 0.0;      // Cartesian
  double y = 0.0;
  double error_bound = 0.0;  // height of a cell at the tail's level; a scale, not a proof
  bool off_boundary = false;  // point lies on no KS_j for the levels examined
};

struct PolygonalPath {
  InitialCondition seed;
  std::vector<PathVertex> vertices;
  LimitEstimate limit;

  /// Euclidean lengths of consecutive segments.
  std::vector<double> gaps() const;
  double length() const;
};

/// Level at which a side of KS_level first appeared (0 for the original triangle).
int side_birth_level(int level, std::size_t side);

/// Builds a path from the members at levels <= max_level (all members when
/// empty). Throws NoCantorBasepoints when no member has a Cantor basepoint,
/// DomainError when a member is not closed.
PolygonalPath extract_path(const CompatibleSequence& seq, std::optional<int> max_level = {});

/// First bounce point of the seed orbit with the direction reversed.
InitialCondition reverse_seed(const CompatibleSequence& seq);

struct CombinedPath {
  std::vector<LatticePoint> vertices;  // limit(p1) ... anchor leg ... limit(p2)
  std::vector<Rational> squared_lengths;
  double length = 0.0;
  bool degenerate = false;  // both halves trace the same point set
};

/// Joins p1 (reversed) and p2 through their shared seed leg. Throws
/// DomainError when p2's seed is not the reverse of p1's first leg.
CombinedPath concatenate(const PolygonalPath& p1, const PolygonalPath& p2);

struct ProbeLevel {
  int level = 0;
  std::size_t basepoints = 0;
  bool strict_alternation = false;  // classes differ at every cyclic step
  bool cantor_isolated = false;     // no two consecutive Cantor basepoints
  std::size_t cantor_count = 0;
  std::size_t c_class_count = 0;    // infinitely many c
};

struct ProbeReport {
  std::vector<ProbeLevel> levels;
  /// Strict alternation of the first member's footprint in travel order.
  bool alternation_observed = false;
  std::vector<double> gaps;
  std::vector<double> gap_ratios;
};

/// Evidence only; never throws on a negative outcome.
ProbeReport alternation_probe(const CompatibleSequence& seq, int depth);

}  // namespace koch
