#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "koch/errors.hpp"
#include "koch/polygonal_paths.hpp"
#include "oracle/oracle.hpp"

using namespace koch;

namespace {

InitialCondition seed(const Rational& t, LatticeVector dir) {
  return make_initial_condition(*cached_prefractal(0), {0, 0, t}, Direction::exact(dir));
}

const CompatibleSequence& midpoint_sequence() {
  static const CompatibleSequence seq = build_sequence(seed(make_rational(1, 2), {2, 1}), 5);
  return seq;
}

bool on_boundary(const std::vector<oracle::Point>& poly, oracle::Point x) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto a = poly[i];
    const auto e = poly[(i + 1) % poly.size()] - a;
    const long double u = ((x - a) / e).real();
    if (std::abs(oracle::cross(e, x - a)) < 1e-12L && u > -1e-12L && u < 1 + 1e-12L) return true;
  }
  return false;
}

}  // namespace

TEST(SideBirth, AgreesWithFloatPolygons) {
  const int n = 3;
  const auto p = build_prefractal(n);
  std::vector<std::vector<oracle::Point>> polys;
  for (int j = 0; j <= n; ++j) polys.push_back(oracle::koch(j));
  for (std::size_t i = 0; i < p.side_count(); ++i) {
    const auto [ax, ay] = to_cartesian(p.side_start(i));
    const auto [bx, by] = to_cartesian(p.side_end(i));
    const oracle::Point mid{(ax + bx) / 2, (ay + by) / 2};
    int born = n;
    while (born > 0 && on_boundary(polys[born - 1], mid)) --born;
    EXPECT_EQ(side_birth_level(n, i), born) << i;
  }
}

TEST(Path, MidpointGapsShrink) {
  const auto path = extract_path(midpoint_sequence());
  ASSERT_GE(path.vertices.size(), 5u);
  const auto gaps = path.gaps();
  for (std::size_t i = 1; i < gaps.size(); ++i) EXPECT_LT(gaps[i], gaps[i - 1]) << i;
  for (const auto& v : path.vertices) EXPECT_EQ(v.type, classify(v.point.t));
  // Every vertex but the deepest is a Cantor point on a side born at its level;
  // the deepest may instead repeat c.
  const auto& tail = path.vertices.back();
  EXPECT_TRUE(is_cantor_point_type(tail.type) || (tail.type.infinite_chars & kC));
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    EXPECT_TRUE(is_cantor_point_type(path.vertices[i].type)) << i;
  }
  for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
    EXPECT_EQ(side_birth_level(path.vertices[i].level, path.vertices[i].point.side),
              path.vertices[i].level);
  }
  EXPECT_TRUE(path.limit.off_boundary);
  EXPECT_GT(path.limit.error_bound, 0.0);
  EXPECT_NEAR(path.length(), [&] {
    double s = 0;
    for (double g : gaps) s += g;
    return s;
  }(), 1e-12);
}

TEST(Path, LimitIsNotOnAnyFloatPolygon) {
  const auto path = extract_path(midpoint_sequence());
  for (int j = 0; j <= 5; ++j) {
    EXPECT_FALSE(on_boundary(oracle::koch(j), {path.limit.x, path.limit.y})) << j;
  }
}

TEST(Path, ErrorScaleFollowsTheTail) {
  const auto path = extract_path(midpoint_sequence(), 4);
  EXPECT_DOUBLE_EQ(path.limit.error_bound,
                   std::sqrt(3.0) / 2 * std::pow(3.0, -path.vertices.back().level));
}

TEST(Path, HookGapsShrinkGeometrically) {
  const auto report = hook_trace(4);
  const auto path = extract_path(report.sequence);
  const auto gaps = path.gaps();
  ASSERT_GE(gaps.size(), 3u);
  for (std::size_t i = 1; i < gaps.size(); ++i) EXPECT_LT(gaps[i], 0.5 * gaps[i - 1]) << i;
  EXPECT_TRUE(std::isfinite(path.length()));
}

TEST(Path, NeedsCantorBasepoints) {
  const auto seq = build_sequence(seed(make_rational(7, 12), {0, 1}), 0);
  EXPECT_THROW(extract_path(seq), NoCantorBasepoints);
}

TEST(Reverse, StartsAtTheFirstBounce) {
  const auto& seq = midpoint_sequence();
  const auto r = reverse_seed(seq);
  const auto& fp = seq.members.front().orbit.footprint;
  EXPECT_EQ(r.point, fp[1].point);
  EXPECT_EQ(r.direction.vector(), -fp[0].direction);
  const auto ref = oracle::billiard(oracle::koch(0), 0, 0.5L, oracle::lattice(2, 1), 1);
  ASSERT_GE(ref.bounces.size(), 2u);
  const auto [x, y] = to_cartesian(cached_prefractal(0)->point_at(r.point));
  EXPECT_NEAR(x, static_cast<double>(ref.bounces[1].point.real()), 1e-12);
  EXPECT_NEAR(y, static_cast<double>(ref.bounces[1].point.imag()), 1e-12);
}

TEST(Concatenate, MidpointJoinsTwoDistinctLimits) {
  const auto& seq = midpoint_sequence();
  const auto forward = extract_path(seq);
  const auto backward = extract_path(build_sequence(reverse_seed(seq), 5));
  const auto joined = concatenate(forward, backward);
  EXPECT_FALSE(joined.degenerate);
  EXPECT_GT(std::hypot(forward.limit.x - backward.limit.x, forward.limit.y - backward.limit.y), 0.1);
  EXPECT_GE(joined.length, forward.length() + backward.length());
  EXPECT_EQ(joined.squared_lengths.size() + 1, joined.vertices.size());
}

TEST(Concatenate, HookRetracesItself) {
  const auto report = hook_trace(3);
  const auto forward = extract_path(report.sequence);
  const auto backward = extract_path(build_sequence(reverse_seed(report.sequence), 3));
  std::set<std::pair<std::string, std::string>> a, b;
  for (const auto& v : forward.vertices) a.emplace(v.position.alpha.get_str(), v.position.beta.get_str());
  for (const auto& v : backward.vertices) b.emplace(v.position.alpha.get_str(), v.position.beta.get_str());
  EXPECT_EQ(a, b);
  EXPECT_TRUE(concatenate(forward, backward).degenerate);
}

TEST(Concatenate, RejectsUnrelatedPaths) {
  const auto forward = extract_path(midpoint_sequence());
  const auto other = extract_path(hook_trace(3).sequence);
  EXPECT_THROW(concatenate(forward, other), DomainError);
}

TEST(Probe, ReportsWithoutThrowing) {
  const auto report = alternation_probe(midpoint_sequence(), 3);
  ASSERT_EQ(report.levels.size(), 4u);
  for (const auto& row : report.levels) {
    EXPECT_EQ(row.basepoints, midpoint_sequence().at(row.level).orbit.footprint.size());
    EXPECT_LE(row.cantor_count + row.c_class_count, row.basepoints);
  }
  // The seed orbit passes two c-class basepoints in a row.
  EXPECT_FALSE(report.alternation_observed);
}
