#include "koch_tools/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "koch/errors.hpp"
#include "koch/flat_surface.hpp"
#include "koch/polygonal_paths.hpp"
#include "koch_tools/directions.hpp"
#include "koch_tools/io.hpp"
#include "koch_tools/svg.hpp"
#include "koch_tools/sweep.hpp"

namespace koch::tools {

namespace {

struct Options {
  int level = -1;
  std::string levels;
  std::string t;
  std::string dir;
  std::string seed;
  std::size_t side = 0;
  bool direct = false;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string json_path;
  std::string svg_path;
  std::string csv_path;
  int cap = kDefaultLevelCap;
  int tile = -1;
  bool both = false;
  bool probe = false;
  long max_s = 2;
  unsigned jobs = 0;
  std::ostream* json_out = nullptr;  // stdout when --json is '-'
};

std::pair<int, int> level_range(const Options& o, std::pair<int, int> fallback) {
  if (!o.levels.empty()) return parse_levels(o.levels);
  if (o.level >= 0) return {o.level, o.level};
  return fallback;
}

// Seed on KS_level; without --direct the seed always lives on KS_0.
InitialCondition resolve_seed(const Options& o, int level) {
  std::string t = o.t;
  std::string dir = o.dir;
  if (!o.seed.empty()) {
    const auto preset = find_preset(o.seed);
    if (!preset) throw DomainError("unknown preset '" + o.seed + "'");
    if (t.empty()) t = std::string(preset->t);
    if (dir.empty()) dir = std::to_string(preset->alpha) + "," + std::to_string(preset->beta);
  }
  if (t.empty() || dir.empty()) throw DomainError("a seed needs --t and --dir, or --seed");
  const int at = o.direct ? level : 0;
  const auto p = cached_prefractal(at, o.cap);
  if (o.side >= p->side_count()) throw DomainError("side index out of range");
  return make_initial_condition(*p, BoundaryPoint{at, o.side, parse_rational(t)}, parse_direction(dir));
}

void emit_json(const json& j, const Options& o) {
  const std::string& path = o.json_path;
  if (path.empty()) return;
  if (path == "-") {
    *o.json_out << dump(j);
    return;
  }
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  f << dump(j);
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  return f;
}

std::string describe_point(const BoundaryPoint& bp) {
  return "side " + std::to_string(bp.side) + ", t = " + to_string(bp.t);
}

std::string histogram(const Orbit& o) {
  std::map<std::string, std::size_t> h;
  for (const auto& fp : o.footprint) ++h[to_string(classify(fp.point.t))];
  std::string s;
  for (const auto& [k, v] : h) s += (s.empty() ? "" : "  ") + k + " x" + std::to_string(v);
  return s;
}

std::string status_line(const Orbit& o) {
  std::string s = status_name(o.status);
  if (o.is_periodic()) s += ", period " + std::to_string(o.period());
  if (o.is_closed()) s += is_hybrid(o) ? ", hybrid" : ", not hybrid";
  return s;
}

void draw_orbit(SvgCanvas& c, const Prefractal& p, const Orbit& o) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& x : footprint_points(p, o)) pts.push_back(to_cartesian(x));
  if (o.is_periodic() && !pts.empty()) pts.push_back(pts.front());
  c.polyline(pts, "#c0392b", 1.2);
  for (const auto& [x, y] : pts) c.dot(x, y, 2.5, "#c0392b");
}

int cmd_build(const Options& o, std::ostream& out) {
  const auto [lo, hi] = level_range(o, {0, 0});
  json all = json::array();
  for (int n = lo; n <= hi; ++n) {
    const Prefractal p = build_prefractal(n, o.cap);
    out << "KS_" << n << ": " << p.vertices().size() << " vertices, side 1/" << to_string(1 / p.side_length())
        << ", area ratio " << to_string(p.area_ratio()) << "\n";
    all.push_back(prefractal_json(p));
    if (n == hi && !o.svg_path.empty()) {
      SvgCanvas c = SvgCanvas::around(p);
      c.polygon(outline(p), "#1f3a93", 1.0, "#eef2fb");
      c.save(o.svg_path);
    }
  }
  emit_json(lo == hi ? all.front() : all, o);
  return kExitOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const int level = o.level < 0 ? 0 : o.level;
  const InitialCondition seed = resolve_seed(o, level);
  const auto p = cached_prefractal(level, o.cap);
  const Orbit orbit = (o.direct || level == 0)
                          ? run_orbit(*p, seed, o.max_steps)
                          : build_sequence(seed, level, o.max_steps, o.cap).at(level).orbit;
  out << "KS_" << level << " orbit from " << describe_point(orbit.initial.point) << ", dir "
      << orbit.initial.direction.describe() << ": " << status_line(orbit) << "\n";
  out << "  types: " << histogram(orbit) << "\n";
  emit_json(orbit_json(orbit), o);
  if (!o.svg_path.empty()) {
    SvgCanvas c = SvgCanvas::around(*p);
    c.polygon(outline(*p), "#1f3a93", 1.0, "#eef2fb");
    draw_orbit(c, *p, orbit);
    c.save(o.svg_path);
  }
  if (!o.csv_path.empty()) {
    auto f = open_csv(o.csv_path);
    f << "index,side,t,type,x,y\n";
    for (std::size_t i = 0; i < orbit.footprint.size(); ++i) {
      const auto& bp = orbit.footprint[i].point;
      const auto [x, y] = to_cartesian(p->point_at(bp));
      f << i << "," << bp.side << "," << to_string(bp.t) << "," << to_string(classify(bp.t)) << "," << x
        << "," << y << "\n";
    }
  }
  if (std::holds_alternative<Truncated>(orbit.status)) {
    throw ResourceError("orbit did not close within " + std::to_string(o.max_steps) + " steps");
  }
  return kExitOk;
}

int cmd_sequence(const Options& o, std::ostream& out) {
  const auto [lo, hi] = level_range(o, {0, 3});
  const InitialCondition seed = resolve_seed(o, lo);
  const CompatibleSequence seq = build_sequence(seed, hi, o.max_steps, o.cap);
  json report = sequence_json(seq);
  std::optional<std::ofstream> csv;
  if (!o.csv_path.empty()) {
    csv = open_csv(o.csv_path);
    *csv << "level,status,period,hybrid,side,t\n";
  }
  bool all_periodic = true;
  for (const auto& m : seq.members) {
    out << "KS_" << m.level << ": " << status_line(m.orbit);
    if (m.initial) out << "  (seed " << describe_point(m.initial->point) << ")";
    out << "\n    " << histogram(m.orbit) << "\n";
    all_periodic = all_periodic && m.orbit.is_periodic();
    if (csv) {
      *csv << m.level << "," << status_name(m.orbit.status) << ","
           << (m.orbit.is_periodic() ? m.orbit.period() : 0) << ","
           << (m.orbit.is_closed() && is_hybrid(m.orbit) ? 1 : 0) << ",";
      if (m.initial) *csv << m.initial->point.side << "," << to_string(m.initial->point.t);
      else *csv << ",";
      *csv << "\n";
    }
  }
  if (all_periodic) {
    const ConstancyReport c = detect_constant(seq);
    out << "constant from: " << (c.stabilizes_at ? "KS_" + std::to_string(*c.stabilizes_at) : "not observed")
        << (c.hypothesis_holds ? "  (all seed types [lr,c])" : "") << "\n";
    report["constancy"] = json{{"stabilizes_at", c.stabilizes_at ? json(*c.stabilizes_at) : json(nullptr)},
                               {"hypothesis_holds", c.hypothesis_holds}};
  }
  emit_json(report, o);
  if (!o.svg_path.empty()) {
    const auto p = cached_prefractal(hi, o.cap);
    SvgCanvas c = SvgCanvas::around(*p);
    c.polygon(outline(*p), "#1f3a93", 1.0, "#eef2fb");
    draw_orbit(c, *p, seq.members.back().orbit);
    c.save(o.svg_path);
  }
  const Dichotomy d = dichotomy_check(seq);
  out << "verdict: " << (d == Dichotomy::AllClosed ? "all closed" : "all dense") << "\n";
  return kExitOk;
}

long long expected_genus(int n) {
  long long four = 1;
  for (int i = 0; i < n; ++i) four *= 4;
  return 3 * four - 2;
}

int cmd_surface(const Options& o, std::ostream& out) {
  const auto [lo, hi] = level_range(o, {0, 4});
  json censuses = json::array();
  json tilings = json::array();
  std::optional<std::ofstream> csv;
  if (!o.csv_path.empty()) {
    csv = open_csv(o.csv_path);
    *csv << "level,chi,genus,acute,reflex,cover_degree\n";
  }
  out << "level     chi   genus   acute  reflex  cover degree\n";
  for (int n = lo; n <= hi; ++n) {
    const SurfaceCensus s = surface_census(n, o.cap);
    char row[128];
    std::snprintf(row, sizeof row, "%5d %7lld %7lld %7zu %7zu %13lld\n", n, s.euler_characteristic, s.genus,
                  s.angles.acute, s.angles.reflex, s.cover_degree);
    out << row;
    censuses.push_back(census_json(s));
    if (csv) {
      *csv << n << "," << s.euler_characteristic << "," << s.genus << "," << s.angles.acute << ","
           << s.angles.reflex << "," << s.cover_degree << "\n";
    }
    if (s.genus != expected_genus(n)) {
      throw VerificationError("genus " + std::to_string(s.genus) + " at level " + std::to_string(n) +
                              " differs from 3*4^n - 2");
    }
    if (s.euler_characteristic != s.euler_from_angles) {
      throw VerificationError("Euler characteristic disagrees with the cone-angle count at level " +
                              std::to_string(n));
    }
    if (n >= 1 && !cover_consistency(n, o.cap).riemann_hurwitz_ok) {
      throw VerificationError("ramification count fails at level " + std::to_string(n));
    }
    if (o.tile >= 0) {
      const HexTiling h = hex_tiling(n, o.tile, o.cap);
      out << "      tiling by side 3^-" << o.tile << ": " << h.triangle_count << " triangles, "
          << h.centers.size() << " hexagon centers, area " << (h.area_matches ? "exact" : "MISMATCH")
          << ", singularities " << (h.all_centered ? "centered" : "NOT centered") << "\n";
      tilings.push_back(tiling_json(h));
      if (!h.area_matches || !h.all_centered) {
        throw VerificationError("hexagon tiling check failed at level " + std::to_string(n));
      }
    }
  }
  json report{{"censuses", censuses}};
  if (o.tile >= 0) report["tilings"] = tilings;
  emit_json(report, o);
  return kExitOk;
}

void print_path(const PolygonalPath& path, std::ostream& out) {
  for (const auto& v : path.vertices) {
    const auto [x, y] = to_cartesian(v.position);
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.5f, %.5f)", x, y);
    out << "  KS_" << v.level << " " << describe_point(v.point) << " " << to_string(v.type) << " " << buf << "\n";
  }
  out << "  gaps:";
  for (double g : path.gaps()) out << " " << g;
  out << "\n  limit estimate (" << path.limit.x << ", " << path.limit.y << ") +/- " << path.limit.error_bound
      << (path.limit.off_boundary ? ", off every built prefractal" : ", ON a built prefractal") << "\n";
}

int cmd_path(const Options& o, std::ostream& out) {
  const auto [lo, hi] = level_range(o, {0, 5});
  const InitialCondition seed = resolve_seed(o, lo);
  const CompatibleSequence seq = build_sequence(seed, hi, o.max_steps, o.cap);
  const PolygonalPath path = extract_path(seq);
  out << "path from " << describe_point(seed.point) << ", dir " << seed.direction.describe() << "\n";
  print_path(path, out);
  json report{{"path", path_json(path)}};

  std::optional<CombinedPath> combined;
  if (o.both) {
    const CompatibleSequence back = build_sequence(reverse_seed(seq), hi, o.max_steps, o.cap);
    const PolygonalPath other = extract_path(back);
    out << "reversed seed path\n";
    print_path(other, out);
    combined = concatenate(path, other);
    out << "combined length " << combined->length << (combined->degenerate ? " (degenerate)" : "") << "\n";
    report["reverse"] = path_json(other);
    report["combined"] = combined_json(*combined);
  }
  if (o.probe) {
    const ProbeReport r = alternation_probe(seq, hi);
    for (const auto& l : r.levels) {
      out << "  KS_" << l.level << ": " << l.basepoints << " basepoints, " << l.cantor_count
          << " Cantor, alternation " << (l.strict_alternation ? "strict" : "broken") << "\n";
    }
    report["probe"] = probe_json(r);
  }
  emit_json(report, o);

  if (!o.svg_path.empty()) {
    const auto p = cached_prefractal(hi, o.cap);
    SvgCanvas c = SvgCanvas::around(*p);
    c.polygon(outline(*p), "#7f8c8d", 0.6, "#f7f7f7");
    std::vector<std::pair<double, double>> pts;
    if (combined) {
      for (const auto& v : combined->vertices) pts.push_back(to_cartesian(v));
    } else {
      for (const auto& v : path.vertices) pts.push_back(to_cartesian(v.position));
      pts.emplace_back(path.limit.x, path.limit.y);
    }
    c.polyline(pts, "#c0392b", 1.4);
    for (const auto& v : path.vertices) {
      const auto [x, y] = to_cartesian(v.position);
      c.dot(x, y, 2.5, "#c0392b");
    }
    c.dot(path.limit.x, path.limit.y, 3.5, "#1f3a93");
    c.save(o.svg_path);
  }
  if (!o.csv_path.empty()) {
    auto f = open_csv(o.csv_path);
    f << "level,side,t,type,x,y\n";
    for (const auto& v : path.vertices) {
      const auto [x, y] = to_cartesian(v.position);
      f << v.level << "," << v.point.side << "," << to_string(v.point.t) << "," << to_string(v.type) << "," << x
        << "," << y << "\n";
    }
  }
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto [lo, hi] = level_range(o, {0, 3});
  if (lo != 0) throw DomainError("sweep seeds live on KS_0; the range must start at 0");
  const auto grid = family_grid(o.max_s);
  const auto results = run_sweep(grid, hi, o.jobs, o.cap);
  std::optional<std::ofstream> csv;
  if (!o.csv_path.empty()) {
    csv = open_csv(o.csv_path);
    *csv << "family,a,b,r,s,level,status,period,hybrid\n";
  }
  json rows = json::array();
  std::size_t failures = 0;
  for (const auto& r : results) {
    const auto& q = r.params;
    std::ostringstream head;
    head << "family " << q.family << " a=" << (q.family == 1 ? q.a : 1) << " b=" << q.b << " r=" << q.r
         << " s=" << q.s;
    out << head.str() << ": ";
    if (r.ok) {
      out << "ok, periods";
      for (const auto& l : r.levels) out << " " << l.period;
    } else {
      ++failures;
      out << "FAIL (" << r.failure << ")";
    }
    out << "\n";
    json levels = json::array();
    for (const auto& l : r.levels) {
      levels.push_back(json{{"level", l.level}, {"status", l.status}, {"period", l.period}, {"hybrid", l.hybrid}});
      if (csv) {
        *csv << q.family << "," << q.a << "," << q.b << "," << q.r << "," << q.s << "," << l.level << ","
             << l.status << "," << l.period << "," << (l.hybrid ? 1 : 0) << "\n";
      }
    }
    rows.push_back(json{{"family", q.family},
                        {"a", q.a},
                        {"b", q.b},
                        {"r", q.r},
                        {"s", q.s},
                        {"ok", r.ok},
                        {"failure", r.failure},
                        {"levels", std::move(levels)}});
  }
  out << results.size() - failures << " of " << results.size() << " sequences periodic and hybrid\n";
  emit_json(json{{"last_level", hi}, {"results", rows}}, o);
  if (failures > 0) {
    throw VerificationError(std::to_string(failures) + " sequence(s) failed the periodic hybrid check");
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact billiards in prefractal Koch snowflakes"};
  app.footer(direction_help());
  app.require_subcommand(1);
  Options o;

  auto add_outputs = [&o](CLI::App* sub) {
    sub->add_option("--json", o.json_path, "write JSON here ('-' for stdout)");
    sub->add_option("--svg", o.svg_path, "write an SVG picture here");
    sub->add_option("--csv", o.csv_path, "write a CSV table here");
    sub->add_option("--cap", o.cap, "largest level that may be built")->capture_default_str();
  };
  auto add_seed = [&o](CLI::App* sub) {
    sub->add_option("--t", o.t, "basepoint as a fraction of the side");
    sub->add_option("--dir", o.dir, "direction A,B or a named angle");
    sub->add_option("--seed", o.seed, "preset seed");
    sub->add_option("--side", o.side, "side index of the basepoint")->capture_default_str();
    sub->add_flag("--direct", o.direct, "place the seed on the requested level instead of KS_0");
    sub->add_option("--max-steps", o.max_steps, "bounce limit per orbit")->capture_default_str();
  };

  auto* build = app.add_subcommand("build", "construct KS_n");
  build->add_option("--level", o.level, "level");
  build->add_option("--levels", o.levels, "level range a..b");
  add_outputs(build);

  auto* orbit = app.add_subcommand("orbit", "run one billiard orbit");
  orbit->add_option("--level", o.level, "level");
  add_seed(orbit);
  add_outputs(orbit);

  auto* sequence = app.add_subcommand("sequence", "compatible orbits over a level range");
  sequence->add_option("--levels", o.levels, "level range a..b");
  sequence->add_option("--level", o.level, "single level");
  add_seed(sequence);
  add_outputs(sequence);

  auto* surface = app.add_subcommand("surface", "genus, cone points and cover degree");
  surface->add_option("--level", o.level, "level");
  surface->add_option("--levels", o.levels, "level range a..b");
  surface->add_option("--tile", o.tile, "also tile by triangles of side 3^-K");
  add_outputs(surface);

  auto* path = app.add_subcommand("path", "polygonal path through Cantor basepoints");
  path->add_option("--levels", o.levels, "level range a..b");
  add_seed(path);
  path->add_flag("--both", o.both, "also follow the reversed seed and join the halves");
  path->add_flag("--probe", o.probe, "report basepoint alternation per level");
  add_outputs(path);

  auto* sweep = app.add_subcommand("sweep", "periodic hybrid check over the seed families");
  sweep->add_option("--levels", o.levels, "level range 0..b");
  sweep->add_option("--max-s", o.max_s, "largest exponent s")->capture_default_str();
  sweep->add_option("--jobs", o.jobs, "worker threads (0: all cores)");
  add_outputs(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitDomain;
  }

  // JSON on stdout replaces the human-readable report.
  std::ostringstream quiet;
  std::ostream& text = o.json_path == "-" ? quiet : out;
  o.json_out = &out;

  try {
    if (build->parsed()) return cmd_build(o, text);
    if (orbit->parsed()) return cmd_orbit(o, text);
    if (sequence->parsed()) return cmd_sequence(o, text);
    if (surface->parsed()) return cmd_surface(o, text);
    if (path->parsed()) return cmd_path(o, text);
    if (sweep->parsed()) return cmd_sweep(o, text);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}

}  // namespace koch::tools
