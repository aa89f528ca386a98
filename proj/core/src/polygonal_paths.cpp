#include "koch/polygonal_paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "koch/errors.hpp"

namespace koch {

std::vector<double> PolygonalPath::gaps() const {
  std::vector<double> out;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const auto [x0, y0] = to_cartesian(vertices[i - 1].position);
    const auto [x1, y1] = to_cartesian(vertices[i].position);
    out.push_back(std::hypot(x1 - x0, y1 - y0));
  }
  return out;
}

double PolygonalPath::length() const {
  double total = 0.0;
  for (double g : gaps()) total += g;
  return total;
}

int side_birth_level(int level, std::size_t side) {
  while (level > 0) {
    const std::size_t slot = side % 4;
    if (slot == 1 || slot == 2) return level;
    side /= 4;
    --level;
  }
  return 0;
}

namespace {

struct Candidate {
  PathVertex vertex;
  double x = 0.0;
  double y = 0.0;
};

bool has_c_tail(const TernaryType& ty) { return (ty.infinite_chars & kC) != 0; }

bool is_cantor(const BoundaryPoint& bp, const TernaryType& ty) {
  return !bp.is_vertex() && is_cantor_point_type(ty);
}

// Distinct basepoints of a member passing `keep`, in travel order.
template <typename Keep>
std::vector<Candidate> candidates(const SequenceMember& m, Keep keep) {
  const auto p = cached_prefractal(m.level, std::max(m.level, kDefaultLevelCap));
  std::vector<Candidate> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& fp : m.orbit.footprint) {
    const TernaryType ty = classify(fp.point.t);
    if (!keep(fp.point, ty)) continue;
    const LatticePoint x = p->point_at(fp.point);
    if (!seen.emplace(x.alpha.get_str(), x.beta.get_str()).second) continue;
    const auto [cx, cy] = to_cartesian(x);
    out.push_back(Candidate{PathVertex{m.level, fp.point, x, ty}, cx, cy});
  }
  return out;
}

const Candidate* nearest(const std::vector<Candidate>& pool, const Candidate& from) {
  const Candidate* best = nullptr;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& c : pool) {
    const double d = std::hypot(c.x - from.x, c.y - from.y);
    if (d < best_d) {
      best_d = d;
      best = &c;
    }
  }
  return best;
}

double gap(const Candidate& a, const Candidate& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Depth-first over the pools, nearest first, each gap strictly shorter than
// the one before. Gives up after `budget` visited nodes.
bool shrinking_chain(const std::vector<std::vector<Candidate>>& pools, std::size_t i, double prev,
                     std::vector<Candidate>& chain, std::size_t& budget) {
  if (i == pools.size()) return true;
  std::vector<std::pair<double, const Candidate*>> options;
  for (const auto& c : pools[i]) {
    const double d = gap(c, chain.back());
    if (d < prev) options.emplace_back(d, &c);
  }
  std::stable_sort(options.begin(), options.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [d, c] : options) {
    if (budget == 0) return false;
    --budget;
    chain.push_back(*c);
    if (shrinking_chain(pools, i + 1, d, chain, budget)) return true;
    chain.pop_back();
  }
  return false;
}

// Centroid of the first finer cell whose base contains the vertex.
LatticePoint cell_centroid(const Prefractal& p, const PathVertex& v, int& cell_level) {
  const TernaryExpansion e = expand(v.point.t);
  std::string digits = e.preperiod + e.period;
  const std::size_t k = digits.find('1');
  if (k == std::string::npos) throw DomainError("address has no c digit");
  Rational lo = 0;
  Rational len = 1;
  for (std::size_t i = 0; i < k; ++i) {
    len /= 3;
    lo += len * (digits[i] - '0');
  }
  len /= 3;
  const LatticePoint start = p.side_start(v.point.side);
  const LatticeVector side = p.side_vector(v.point.side);
  const LatticePoint a = start + Rational(lo + len) * side;
  const LatticePoint c = start + Rational(lo + 2 * len) * side;
  const LatticePoint b = a + rotate60(c - a, -1);
  cell_level = p.level() + static_cast<int>(k) + 1;
  return make_rational(1, 3) * (a + b + c);
}

}  // namespace

PolygonalPath extract_path(const CompatibleSequence& seq, std::optional<int> max_level) {
  std::vector<const SequenceMember*> members;
  for (const auto& m : seq.members) {
    if (max_level && m.level > *max_level) break;
    if (!m.orbit.is_closed()) {
      throw DomainError("path extraction needs closed orbits; level " + std::to_string(m.level) +
                        " is " + status_name(m.orbit.status));
    }
    members.push_back(&m);
  }
  auto cantor_any = [](const BoundaryPoint& bp, const TernaryType& ty) { return is_cantor(bp, ty); };

  std::size_t start = 0;
  std::vector<Candidate> anchors;
  for (; start < members.size(); ++start) {
    anchors = candidates(*members[start], cantor_any);
    if (!anchors.empty()) break;
  }
  if (anchors.empty()) throw NoCantorBasepoints("no member has a basepoint of type [lr,∅]");

  std::vector<std::vector<Candidate>> newborn(members.size());
  for (std::size_t i = start + 1; i < members.size(); ++i) {
    const int level = members[i]->level;
    newborn[i] = candidates(*members[i], [level](const BoundaryPoint& bp, const TernaryType& ty) {
      return is_cantor(bp, ty) && side_birth_level(level, bp.side) == level;
    });
  }
  std::vector<Candidate> terminals;
  if (members.size() > start + 1) {
    terminals = candidates(*members.back(), [](const BoundaryPoint& bp, const TernaryType& ty) {
      return !bp.is_vertex() && has_c_tail(ty);
    });
  }

  // Pools for the levels after the anchor; the deepest one prefers c-tails.
  std::vector<std::vector<Candidate>> pools;
  for (std::size_t i = start + 1; i < members.size(); ++i) {
    pools.push_back(i + 1 == members.size() && !terminals.empty() ? terminals : newborn[i]);
  }
  std::vector<Candidate> chain{anchors.front()};
  std::size_t budget = 200000;
  if (!shrinking_chain(pools, 0, std::numeric_limits<double>::infinity(), chain, budget)) {
    chain.resize(1);
    for (const auto& pool : pools) {
      const Candidate* next = nearest(pool, chain.back());
      if (!next) break;
      chain.push_back(*next);
    }
  }

  PolygonalPath path{*members.front()->initial, {}, {}};
  for (const auto& n : chain) path.vertices.push_back(n.vertex);

  const PathVertex& tail = path.vertices.back();
  const auto p = cached_prefractal(tail.level, std::max(tail.level, kDefaultLevelCap));
  LimitEstimate& limit = path.limit;
  if (has_c_tail(tail.type)) {
    int cell_level = 0;
    limit.point = cell_centroid(*p, tail, cell_level);
  } else {
    limit.point = tail.position;
  }
  std::tie(limit.x, limit.y) = to_cartesian(limit.point);
  limit.error_bound = std::sqrt(3.0) / 2.0 * std::pow(3.0, -tail.level);
  limit.off_boundary = true;
  for (const auto* m : members) {
    const auto q = cached_prefractal(m->level, std::max(m->level, kDefaultLevelCap));
    if (locate_on_boundary(*q, limit.point)) limit.off_boundary = false;
  }
  return path;
}

InitialCondition reverse_seed(const CompatibleSequence& seq) {
  if (seq.members.empty() || !seq.members.front().initial) {
    throw DomainError("sequence has no materialized seed");
  }
  const SequenceMember& m = seq.members.front();
  if (!m.initial->direction.is_exact()) throw DomainError("reverse seed needs an exact direction");
  if (m.orbit.footprint.size() < 2) throw DomainError("seed orbit has fewer than two basepoints");
  const auto p = cached_prefractal(m.level, std::max(m.level, kDefaultLevelCap));
  const FootprintPoint& first = m.orbit.footprint.front();
  const FootprintPoint& second = m.orbit.footprint[1];
  if (!(first.point == m.initial->point)) throw DomainError("footprint does not start at the seed");
  return make_initial_condition(*p, second.point, Direction::exact(-first.direction));
}

CombinedPath concatenate(const PolygonalPath& p1, const PolygonalPath& p2) {
  CombinedPath out;
  auto as_set = [](const PolygonalPath& path) {
    std::set<std::pair<std::string, std::string>> s;
    for (const auto& v : path.vertices) s.emplace(v.position.alpha.get_str(), v.position.beta.get_str());
    return s;
  };
  auto seed_point = [](const PolygonalPath& path) {
    const auto p = cached_prefractal(path.seed.point.level,
                                     std::max(path.seed.point.level, kDefaultLevelCap));
    return p->point_at(path.seed.point);
  };

  std::vector<LatticePoint> chain;
  if (as_set(p1) == as_set(p2)) {
    out.degenerate = true;
    chain.push_back(p1.limit.point);
    for (auto it = p1.vertices.rbegin(); it != p1.vertices.rend(); ++it) chain.push_back(it->position);
  } else {
    if (!p1.seed.direction.is_exact() || !p2.seed.direction.is_exact() ||
        p2.seed.direction.vector() != -p1.seed.direction.vector()) {
      throw DomainError("paths do not share a reversed seed direction");
    }
    const LatticePoint a = seed_point(p1);
    const LatticePoint b = seed_point(p2);
    if (sgn(lattice_cross(b - a, p1.seed.direction.vector())) != 0 ||
        sgn(lattice_dot(b - a, p1.seed.direction.vector())) <= 0) {
      throw DomainError("second seed is not on the first seed's leg");
    }
    chain.push_back(p1.limit.point);
    for (auto it = p1.vertices.rbegin(); it != p1.vertices.rend(); ++it) chain.push_back(it->position);
    chain.push_back(a);
    chain.push_back(b);
    for (const auto& v : p2.vertices) chain.push_back(v.position);
    chain.push_back(p2.limit.point);
  }
  for (const auto& x : chain) {
    if (out.vertices.empty() || out.vertices.back() != x) out.vertices.push_back(x);
  }
  for (std::size_t i = 1; i < out.vertices.size(); ++i) {
    const Rational sq = squared_length(out.vertices[i] - out.vertices[i - 1]);
    out.squared_lengths.push_back(sq);
    out.length += std::sqrt(sq.get_d());
  }
  return out;
}

ProbeReport alternation_probe(const CompatibleSequence& seq, int depth) {
  ProbeReport report;
  const int last = std::min(seq.last_level, seq.first_level + std::max(depth, 0));
  for (const auto& m : seq.members) {
    if (m.level > last) break;
    ProbeLevel row;
    row.level = m.level;
    const auto& fp = m.orbit.footprint;
    row.basepoints = fp.size();
    // 0: Cantor, 1: repeats c, 2: neither.
    std::vector<int> cls;
    for (const auto& f : fp) {
      const TernaryType ty = classify(f.point.t);
      if (is_cantor(f.point, ty)) {
        cls.push_back(0);
        ++row.cantor_count;
      } else if (!f.point.is_vertex() && has_c_tail(ty)) {
        cls.push_back(1);
        ++row.c_class_count;
      } else {
        cls.push_back(2);
      }
    }
    const std::size_t n = cls.size();
    row.strict_alternation = n >= 2;
    row.cantor_isolated = n >= 1;
    for (std::size_t i = 0; i < n; ++i) {
      const int a = cls[i];
      const int b = cls[(i + 1) % n];
      if (a == 2 || a == b) row.strict_alternation = false;
      if (a == 2 || (a == 0 && b == 0)) row.cantor_isolated = false;
    }
    report.levels.push_back(row);
  }
  report.alternation_observed = !report.levels.empty() && report.levels.front().strict_alternation;
  try {
    const PolygonalPath path = extract_path(seq, last);
    report.gaps = path.gaps();
    for (std::size_t i = 1; i < report.gaps.size(); ++i) {
      if (report.gaps[i - 1] > 0.0) report.gap_ratios.push_back(report.gaps[i] / report.gaps[i - 1]);
    }
  } catch (const Error&) {
    // No path: the report carries type evidence only.
  }
  return report;
}

}  // namespace koch
