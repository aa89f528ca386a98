// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "koch/compatibility.hpp"
#include "koch/errors.hpp"
#include "koch/flat_surface.hpp"
#include "koch/polygonal_paths.hpp"
#include "koch_tools/sweep.hpp"

using namespace koch;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string describe(const FamilyParams& q) {
  std::ostringstream s;
  s << "family " << q.family << " a=" << q.a << " b=" << q.b << " r=" << q.r << " s=" << q.s;
  return s.str();
}

InitialCondition base_seed(const Rational& t, LatticeVector dir) {
  return make_initial_condition(*cached_prefractal(0), {0, 0, t}, Direction::exact(dir));
}

Outcome genus_formula() {
  const auto start = std::chrono::steady_clock::now();
  std::string bad;
  for (int n = 0; n <= 6; ++n) {
    const auto s = surface_census(n);
    if (s.genus != 3 * pow_ll(4, n) - 2) bad += " n=" + std::to_string(n);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << "n=0..6 in " << secs << " s" << (bad.empty() ? "" : ", mismatch at" + bad);
  return {bad.empty() && secs < 1.0, d.str()};
}

Outcome gauss_bonnet() {
  std::string bad;
  for (int n = 0; n <= 6; ++n) {
    const auto s = surface_census(n);
    long long chi = 0;
    for (const auto& c : s.cone_points) chi += (1 - c.multiple) * c.count;
    if (s.euler_characteristic != s.euler_from_angles || chi != s.euler_characteristic) {
      bad += " n=" + std::to_string(n);
    }
  }
  return {bad.empty(), bad.empty() ? "n=0..6 agree" : "mismatch at" + bad};
}

Outcome cover() {
  std::string bad;
  std::string degrees;
  for (int n = 1; n <= 4; ++n) {
    const auto r = cover_consistency(n);
    const auto s = surface_census(n);
    degrees += " " + std::to_string(r.degree);
    if (r.degree <= 0 || !r.riemann_hurwitz_ok ||
        3 * static_cast<long long>(s.angles.reflex) != 6 * pow_ll(4, n) - 6) {
      bad += " n=" + std::to_string(n);
    }
  }
  return {bad.empty(), "degrees" + degrees + (bad.empty() ? "" : ", failing" + bad)};
}

Outcome hexagons() {
  std::string detail;
  bool ok = true;
  for (const auto& [n, k] : {std::pair{1, 2}, std::pair{2, 3}}) {
    const auto t = hex_tiling(n, k);
    ok = ok && t.all_centered && t.area_matches;
    detail += "(" + std::to_string(n) + "," + std::to_string(k) + "): " +
              std::to_string(t.triangle_count) + " triangles, " +
              std::to_string(t.singularities.size()) + " singularities" +
              (t.all_centered ? " centered" : " NOT centered") +
              (t.area_matches ? "; " : ", area mismatch; ");
  }
  return {ok, detail};
}

Outcome family_sweep(const std::vector<tools::SweepResult>& results, double secs) {
  std::size_t failures = 0;
  std::string first;
  for (const auto& r : results) {
    if (r.ok) continue;
    ++failures;
    if (first.size() < 400) first += "; " + describe(r.params) + ": " + r.failure;
  }
  std::ostringstream d;
  d << results.size() << " tuples, " << failures << " failures, " << secs << " s" << first;
  return {failures == 0 && secs < 300, d.str()};
}

Outcome dichotomy() {
  std::size_t closed = 0, missing = 0, other = 0;
  std::string notes;
  for (const auto& q : tools::family_grid(2)) {
    try {
      const auto seq = build_sequence(family_seed(q), 3);
      if (dichotomy_check(seq) == Dichotomy::AllClosed) {
        ++closed;
      } else {
        ++other;
      }
    } catch (const NoCompatible&) {
      ++missing;
      notes += "; no sequence for " + describe(q);
    } catch (const VerificationError& e) {
      ++other;
      notes += "; mixed for " + describe(q) + ": " + e.what();
    }
  }
  std::size_t dense = 0;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> angle(0.2, 2.9);
  const Rational starts[] = {make_rational(1, 2), make_rational(1, 4), make_rational(7, 12),
                             make_rational(3, 4), make_rational(5, 8)};
  for (int i = 0; i < 10; ++i) {
    const auto init = make_initial_condition(*cached_prefractal(0), {0, 0, starts[i % 5]},
                                             Direction::irrational("irr" + std::to_string(i), angle(rng)));
    try {
      if (dichotomy_check(build_sequence(init, 3)) == Dichotomy::AllDense) ++dense;
    } catch (const Error& e) {
      notes += std::string("; symbolic seed ") + std::to_string(i) + ": " + e.what();
    }
  }
  std::ostringstream d;
  d << closed << " exact sequences AllClosed, " << other << " not, " << missing
    << " tuples without a compatible sequence; " << dense << "/10 symbolic AllDense" << notes;
  return {other == 0 && dense == 10, d.str()};
}

Outcome constant_sequence() {
  const auto seq = build_sequence(base_seed(make_rational(7, 12), {0, 1}), 3);
  const auto report = detect_constant(seq);
  bool types_ok = true;
  for (const auto& m : seq.members) {
    if (m.level == 0) continue;
    for (const auto& fp : m.orbit.footprint) {
      types_ok = types_ok && classify(fp.point.t) == parse_ternary_type("[lr,0]");
    }
  }
  const bool ok = report.stabilizes_at == 1 && types_ok;
  std::string d = "stabilizes at ";
  d += report.stabilizes_at ? std::to_string(*report.stabilizes_at) : "never";
  d += types_ok ? ", level 1..3 types all [lr,∅]" : ", level 1..3 types differ from [lr,∅]";
  return {ok, d};
}

Outcome hook() {
  const auto report = hook_trace(1);
  const auto& h0 = report.levels.at(0);
  const auto& h1 = report.levels.at(1);
  const auto want = parse_ternary_type("[c,lr]");
  bool feet_ok = h0.retracing;
  std::string feet;
  for (const auto& ty : h0.feet_types) {
    feet += " " + to_string(ty);
    feet_ok = feet_ok && ty == want;
  }
  const bool periodic = report.sequence.at(0).orbit.is_periodic();
  const bool ok = periodic && feet_ok && report.seed_reused && h1.second_is_cantor;
  std::ostringstream d;
  d << "level 0 " << (periodic ? "periodic" : "not periodic") << " with "
    << h0.feet.size() << " perpendicular feet, types" << feet << " (expected [c,lr]); "
    << "x_1 = x_0: " << (report.seed_reused ? "yes" : "no")
    << "; level-1 second basepoint " << to_string(h1.second_type)
    << (h1.second_is_cantor ? " (Cantor)" : " (not Cantor)");
  return {ok, d.str()};
}

Outcome unfolding() {
  std::mt19937 rng(17);
  const auto p = cached_prefractal(0);
  std::size_t tried = 0, checked = 0;
  std::string bad;
  while (checked < 50 && tried < 2000) {
    ++tried;
    FamilyParams q;
    q.family = std::uniform_int_distribution<int>(1, 2)(rng);
    q.s = std::uniform_int_distribution<long>(1, 3)(rng);
    q.b = 2 * std::uniform_int_distribution<long>(0, 4)(rng) + 1;
    q.a = std::uniform_int_distribution<long>(1, 6)(rng);
    const long denom = q.family == 1 ? (1L << (2 * q.s)) : (1L << q.s);
    q.r = 2 * std::uniform_int_distribution<long>(0, denom / 2 - 1)(rng) + 1;
    const Orbit o = run_orbit(*p, family_seed(q));
    if (!o.is_periodic()) continue;
    ++checked;
    try {
      const auto u = unfold_orbit(*p, o);
      const auto folded = fold_segment(*p, u.start, u.end);
      if (u.copies != o.period() || folded.footprint != o.footprint) bad += "; " + describe(q);
    } catch (const Error& e) {
      bad += "; " + describe(q) + ": " + e.what();
    }
  }
  std::ostringstream d;
  d << checked << " periodic orbits checked" << bad;
  return {checked == 50 && bad.empty(), d.str()};
}

Outcome ternary_fixtures() {
  const bool ok = classify(make_rational(1, 3)) == parse_ternary_type("[r,l]") &&
                  to_string(expand(make_rational(1, 3))) == "lr̅" &&
                  classify(make_rational(1, 4)) == parse_ternary_type("[lr,0]") &&
                  classify(make_rational(7, 12)) == parse_ternary_type("[lr,c]") &&
                  classify(make_rational(3, 4)) == parse_ternary_type("[lr,0]");
  return {ok, "1/3 " + to_string(classify(make_rational(1, 3))) + " " +
                  to_string(expand(make_rational(1, 3))) + ", 1/4 " +
                  to_string(classify(make_rational(1, 4))) + ", 7/12 " +
                  to_string(classify(make_rational(7, 12))) + ", 3/4 " +
                  to_string(classify(make_rational(3, 4)))};
}

Outcome path_convergence() {
  const auto seq = build_sequence(base_seed(make_rational(1, 2), {2, 1}), 6);
  const auto at5 = extract_path(seq, 5);
  const auto at6 = extract_path(seq, 6);
  const auto gaps = at6.gaps();
  bool shrinking = !gaps.empty();
  for (std::size_t i = 1; i < gaps.size(); ++i) shrinking = shrinking && gaps[i] < gaps[i - 1];
  const double drift = std::hypot(at5.limit.x - at6.limit.x, at5.limit.y - at6.limit.y);
  const double tol = std::sqrt(3.0) * std::pow(3.0, -5);
  // Every path with at least one segment; each estimate is checked against
  // all levels up to its depth.
  bool off = true;
  for (int d = 1; d <= 6; ++d) {
    const auto path = extract_path(seq, d);
    if (path.vertices.size() >= 2) off = off && path.limit.off_boundary;
  }
  std::ostringstream d;
  d << gaps.size() << " gaps " << (shrinking ? "decreasing" : "NOT decreasing")
    << ", limit drift 5 vs 6 = " << drift << " (tolerance " << tol << "), limit "
    << (off ? "off" : "ON") << " the boundary";
  return {shrinking && drift < tol && off, d.str()};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << o.detail
              << std::endl;
  };

  report(1, "genus formula", genus_formula);
  report(2, "Gauss-Bonnet cross-check", gauss_bonnet);
  report(3, "cover consistency", cover);
  report(4, "hexagon tiling", hexagons);

  const auto start = std::chrono::steady_clock::now();
  const auto sweep = tools::run_sweep(tools::family_grid(2), 3);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(5, "family sweep", [&] { return family_sweep(sweep, secs); });

  report(6, "constant sequence", constant_sequence);
  report(7, "hook orbit", hook);
  report(8, "unfolding parity", unfolding);
  report(9, "ternary fixtures", ternary_fixtures);
  report(10, "dichotomy", dichotomy);
  report(11, "path convergence", path_convergence);

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
