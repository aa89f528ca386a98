#include "koch/compatibility.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <set>

#include "koch/errors.hpp"

namespace koch {

std::shared_ptr<const Prefractal> cached_prefractal(int n, int cap) {
  if (n < 0) throw DomainError("prefractal level must be nonnegative");
  if (n > cap) {
    throw ResourceError("prefractal level " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Prefractal>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const Prefractal>(build_prefractal(n, cap));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(built)).first->second;
}

namespace {

bool points_inward(const Prefractal& p, const BoundaryPoint& bp, const LatticeVector& dir) {
  return sgn(lattice_cross(p.side_vector(bp.side), dir)) > 0;
}

}  // namespace

BoundaryPoint compatible_point(const InitialCondition& init, int target, int cap) {
  const int m = init.point.level;
  if (target <= m) throw DomainError("target level must exceed the seed level");
  if (!init.direction.is_exact()) throw DomainError("compatible points need an exact direction");
  const auto coarse = cached_prefractal(m, cap);
  const auto fine = cached_prefractal(target, cap);
  const LatticeVector& theta = init.direction.vector();
  const LatticePoint x = coarse->point_at(init.point);

  if (const auto here = locate_on_boundary(*fine, x)) {
    if (here->is_vertex()) throw NoCompatible(target, "basepoint " + to_string(x) + " is a vertex");
    if (!points_inward(*fine, *here, theta)) {
      throw NoCompatible(target, "direction does not enter the table at " + to_string(x));
    }
    return *here;
  }

  Hit hit;
  try {
    hit = cast_ray(*fine, x, -theta);
  } catch (const DegenerateRay& e) {
    throw NoCompatible(target, e.what());
  }
  if (hit.is_corner()) {
    throw NoCompatible(target, "backward ray from " + to_string(x) + " ends at corner " +
                                   to_string(hit.point));
  }
  const BoundaryPoint bp = std::get<SideInterior>(hit.where).point;
  if (!points_inward(*fine, bp, theta)) {
    throw NoCompatible(target, "direction does not enter the table at " + to_string(hit.point));
  }
  if (segment_meets_boundary_beyond(*fine, hit.point, x)) {
    throw NoCompatible(target, "segment to the coarser basepoint meets the boundary again");
  }
  return bp;
}

const SequenceMember& CompatibleSequence::at(int level) const {
  if (level < first_level || level > last_level) throw DomainError("level outside the sequence");
  return members[static_cast<std::size_t>(level - first_level)];
}

CompatibleSequence build_sequence(const InitialCondition& seed, int last_level,
                                  std::size_t max_steps, int cap) {
  const int first = seed.point.level;
  if (last_level < first) throw DomainError("sequence range is empty");
  CompatibleSequence seq{seed.direction, first, last_level, {}};
  seq.members.reserve(static_cast<std::size_t>(last_level - first + 1));

  if (!seed.direction.is_exact()) {
    for (int n = first; n <= last_level; ++n) {
      Orbit o{n, seed, {}, DenseByDirection{}};
      seq.members.push_back(SequenceMember{
          n, n == first ? std::optional<InitialCondition>(seed) : std::nullopt, std::move(o)});
    }
    return seq;
  }

  std::vector<LatticePoint> anchors;
  InitialCondition current = seed;
  for (int n = first; n <= last_level; ++n) {
    const auto p = cached_prefractal(n, cap);
    if (n > first) {
      current = make_initial_condition(*p, compatible_point(current, n, cap), seed.direction);
    }
    const LatticePoint here = p->point_at(current.point);
    for (const LatticePoint& earlier : anchors) {
      if (earlier == here) continue;
      if (segment_meets_boundary_beyond(*p, here, earlier)) {
        throw NoCompatible(n, "segment from " + to_string(here) + " to " + to_string(earlier) +
                                  " meets the boundary again");
      }
    }
    anchors.push_back(here);
    seq.members.push_back(SequenceMember{n, current, run_orbit(*p, current, max_steps)});
  }
  return seq;
}

Dichotomy dichotomy_check(const CompatibleSequence& seq) {
  const bool exact = seq.theta.is_exact();
  for (const auto& m : seq.members) {
    const bool dense = std::holds_alternative<DenseByDirection>(m.orbit.status);
    if (exact && !m.orbit.is_closed()) {
      throw VerificationError("level " + std::to_string(m.level) + " orbit with exact direction is " +
                              status_name(m.orbit.status));
    }
    if (!exact && !dense) {
      throw VerificationError("level " + std::to_string(m.level) +
                              " orbit with irrational direction is " + status_name(m.orbit.status));
    }
  }
  return exact ? Dichotomy::AllClosed : Dichotomy::AllDense;
}

namespace {

Integer pow_int(unsigned long base, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

}  // namespace

InitialCondition family_seed(const FamilyParams& q) {
  if (q.family != 1 && q.family != 2) throw DomainError("family must be 1 or 2");
  if (q.b < 1 || q.b % 2 == 0) throw DomainError("b must be a positive odd integer");
  if (q.s < 1) throw DomainError("s must be at least 1");
  if (q.r < 1 || q.r % 2 == 0) throw DomainError("r must be a positive odd integer");
  Integer denom;
  LatticeVector dir;
  if (q.family == 1) {
    if (q.a < 1) throw DomainError("a must be a positive integer");
    denom = pow_int(4, static_cast<unsigned long>(q.s));
    dir = LatticeVector(q.a, q.b);
  } else {
    denom = pow_int(2, static_cast<unsigned long>(q.s));
    dir = LatticeVector(1, 2 * q.b);
  }
  if (Integer(q.r) >= denom) throw DomainError("r must be below the denominator");
  const auto p = cached_prefractal(0);
  return make_initial_condition(*p, BoundaryPoint{0, 0, make_rational(Integer(q.r), denom)},
                                Direction::exact(dir));
}

bool lattice_avoidance_check(const Rational& x0, const LatticeVector& dir, int k_max,
                             long window) {
  if (dir.is_zero()) throw DomainError("zero direction");
  if (k_max < 0 || window < 0) throw DomainError("negative search bounds");
  for (int k = 0; k <= k_max; ++k) {
    const Integer scale = pow_int(3, static_cast<unsigned long>(k));
    const Integer limit = Integer(window + 1) * scale;
    // (X - x0) * dir.beta == Y * dir.alpha for X = P / 3^k, Y = Q / 3^k.
    for (Integer qn = -limit; qn <= limit; ++qn) {
      const Rational y(qn, scale);
      Rational x;
      if (sgn(dir.beta) == 0) {
        if (sgn(qn) != 0) continue;
        // Horizontal line on the base: every scale-k point of it collides.
        return false;
      }
      x = x0 + y * dir.alpha / dir.beta;
      const Rational scaled = x * Rational(scale);
      if (scaled.get_den() != 1) continue;
      if (abs(scaled.get_num()) <= limit) return false;
    }
  }
  return true;
}

bool lattice_avoidance_check(const InitialCondition& init, int k_max, long window) {
  if (init.point.level != 0 || init.point.side != 0) {
    throw DomainError("avoidance check expects a seed on the base of KS_0");
  }
  return lattice_avoidance_check(init.point.t, init.direction.vector(), k_max, window);
}

std::vector<LatticePoint> footprint_points(const Prefractal& p, const Orbit& o) {
  std::vector<LatticePoint> out;
  out.reserve(o.footprint.size());
  for (const auto& fp : o.footprint) out.push_back(p.point_at(fp.point));
  return out;
}

namespace {

std::set<std::pair<std::string, std::string>> point_set(const SequenceMember& m) {
  const auto p = cached_prefractal(m.level, std::max(m.level, kDefaultLevelCap));
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& x : footprint_points(*p, m.orbit)) {
    out.emplace(x.alpha.get_str(), x.beta.get_str());
  }
  return out;
}

}  // namespace

ConstancyReport detect_constant(const CompatibleSequence& seq) {
  for (const auto& m : seq.members) {
    if (!m.orbit.is_periodic()) {
      throw DomainError("constancy needs periodic members; level " + std::to_string(m.level) +
                        " is " + status_name(m.orbit.status));
    }
  }
  ConstancyReport report;
  if (seq.first_level == 0 && !seq.members.empty()) {
    report.hypothesis_holds = true;
    for (const auto& fp : seq.members.front().orbit.footprint) {
      if (!is_constancy_type(classify(fp.point.t))) report.hypothesis_holds = false;
    }
  }
  if (seq.members.size() == 1) {
    report.stabilizes_at = seq.first_level;
    return report;
  }
  const auto last = point_set(seq.members.back());
  std::size_t start = seq.members.size() - 1;
  while (start > 0 && point_set(seq.members[start - 1]) == last) --start;
  if (start + 1 < seq.members.size()) {
    report.stabilizes_at = seq.members[start].level;
  }
  return report;
}

InitialCondition hook_seed() {
  const auto p = cached_prefractal(0);
  return make_initial_condition(*p, BoundaryPoint{0, 0, make_rational(3, 4)},
                                Direction::exact(LatticeVector(-2, 1)));
}

HookReport hook_trace(int last_level, int cap) {
  if (last_level < 0) throw DomainError("level must be nonnegative");
  HookReport report{build_sequence(hook_seed(), last_level, kDefaultMaxSteps, cap), {}, false};
  std::vector<std::pair<double, double>> previous_feet;
  for (const auto& m : report.sequence.members) {
    const auto p = cached_prefractal(m.level, cap);
    HookLevel row;
    row.level = m.level;
    const Orbit& o = m.orbit;
    if (o.is_periodic()) row.period = o.period();
    for (const auto& fp : o.footprint) {
      if (is_perpendicular(*p, fp)) {
        row.feet.push_back(fp);
        row.feet_types.push_back(classify(fp.point.t));
      }
    }
    row.retracing = row.feet.size() == 2;
    if (o.footprint.size() >= 3) {
      const BoundaryPoint& second = o.footprint[1].point;
      row.second_type = classify(second.t);
      row.second_is_cantor = !second.is_vertex() && is_cantor_point_type(row.second_type);
      row.third_type = classify(o.footprint[2].point.t);
      row.third_is_c_lr = row.third_type == TernaryType{kC, kL | kR};
    }
    std::vector<std::pair<double, double>> feet;
    for (const auto& f : row.feet) feet.push_back(to_cartesian(p->point_at(f.point)));
    row.foot_shift = std::numeric_limits<double>::quiet_NaN();
    if (!previous_feet.empty() && !feet.empty()) {
      double worst = 0.0;
      for (const auto& a : feet) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : previous_feet) {
          best = std::min(best, std::hypot(a.first - b.first, a.second - b.second));
        }
        worst = std::max(worst, best);
      }
      row.foot_shift = worst;
    }
    previous_feet = std::move(feet);
    report.levels.push_back(std::move(row));
  }
  if (report.sequence.members.size() >= 2) {
    const auto p0 = cached_prefractal(report.sequence.first_level, cap);
    const auto p1 = cached_prefractal(report.sequence.first_level + 1, cap);
    report.seed_reused = p0->point_at(report.sequence.members[0].initial->point) ==
                         p1->point_at(report.sequence.members[1].initial->point);
  }
  return report;
}

}  // namespace koch
