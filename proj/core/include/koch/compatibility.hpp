#pragma once

// Compatible initial conditions across levels and the sequences of orbits
// they generate.
//
// x_n is compatible with x_m (m < n) for a shared direction theta when the
// segment from x_n to x_m, travelling along theta, meets KS_n only at x_n.

#include <memory>
#include <optional>
#include <vector>

#include "koch/billiard.hpp"
#include "koch/prefractal.hpp"
#include "koch/ternary.hpp"

namespace koch {

/// Process-wide cache of built prefractals; safe to call from several threads.
std::shared_ptr<const Prefractal> cached_prefractal(int n, int cap = kDefaultLevelCap);

/// The level-`target` basepoint compatible with `init` (on KS_m, m < target).
/// Throws NoCompatible when none exists.
BoundaryPoint compatible_point(const InitialCondition& init, int target,
                               int cap = kDefaultLevelCap);

struct SequenceMember {
  int level = 0;
  /// Empty for symbolic directions above the seed level: those basepoints
  /// are never materialized.
  std::optional<InitialCondition> initial;
  Orbit orbit;
};

struct CompatibleSequence {
  Direction theta;
  int first_level = 0;
  int last_level = 0;
  std::vector<SequenceMember> members;

  const SequenceMember& at(int level) const;
};

/// Chains compatible_point from the seed's level up to `last_level`, runs
/// every orbit and checks the segment condition for every pair of levels.
CompatibleSequence build_sequence(const InitialCondition& seed, int last_level,
                                  std::size_t max_steps = kDefaultMaxSteps,
                                  int cap = kDefaultLevelCap);

enum class Dichotomy { AllClosed, AllDense };

/// Throws VerificationError on a mixed or inconsistent sequence.
Dichotomy dichotomy_check(const CompatibleSequence& seq);

struct FamilyParams {
  int family = 1;  // 1: x0 = r/4^s, direction a*u1 + b*u2; 2: x0 = r/2^s, direction u1 + 2b*u2
  long a = 1;      // ignored for family 2
  long b = 1;
  long r = 1;
  long s = 1;
};

/// Seed on the base of KS_0. Throws DomainError on violated parameter rules.
InitialCondition family_seed(const FamilyParams& params);

/// Brute force over scale-3^-k lattice points (k <= k_max) with integer
/// parts in [-window, window]: true when the line through (x0, 0) along
/// `dir` meets none of them.
bool lattice_avoidance_check(const Rational& x0, const LatticeVector& dir, int k_max,
                             long window = 4);
bool lattice_avoidance_check(const InitialCondition& init, int k_max, long window = 4);

struct ConstancyReport {
  /// Least level from which all members carry the same footprint point set,
  /// provided at least two members agree; empty otherwise. A one-member
  /// sequence is stable at its own level.
  std::optional<int> stabilizes_at;
  /// Every level-0 footprint basepoint has type [lr,c].
  bool hypothesis_holds = false;
};

/// Throws DomainError unless every member is Periodic.
ConstancyReport detect_constant(const CompatibleSequence& seq);

/// Canonical hook seed: x0 = 3/4 on the base, direction (-2, 1).
InitialCondition hook_seed();

struct HookLevel {
  int level = 0;
  std::size_t period = 0;
  bool retracing = false;                    // two perpendicular feet
  std::vector<FootprintPoint> feet;          // perpendicular feet, travel order
  std::vector<TernaryType> feet_types;
  TernaryType second_type;                   // basepoint of f_n(x_n)
  bool second_is_cantor = false;
  TernaryType third_type;                    // basepoint of f_n^2(x_n)
  bool third_is_c_lr = false;                // literal [c,lr]
  double foot_shift = 0.0;                   // distance to the previous level's foot, NaN at the start
};

struct HookReport {
  CompatibleSequence sequence;
  std::vector<HookLevel> levels;
  bool seed_reused = false;  // x_1 = x_0 as planar points
};

HookReport hook_trace(int last_level, int cap = kDefaultLevelCap);

/// Planar footprint basepoints of a member, in travel order.
std::vector<LatticePoint> footprint_points(const Prefractal& p, const Orbit& o);

}  // namespace koch
