#include "koch_tools/io.hpp"

#include <cmath>
#include <map>

namespace koch::tools {

namespace {

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json status_json(const OrbitStatus& s) {
  json j;
  j["kind"] = status_name(s);
  if (const auto* p = std::get_if<Periodic>(&s)) j["period"] = p->period;
  if (const auto* c = std::get_if<Singular>(&s)) {
    j["forward_corner"] = c->forward_corner;
    j["backward_corner"] = c->backward_corner;
  }
  if (const auto* t = std::get_if<Truncated>(&s)) j["steps"] = t->steps;
  return j;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json rational_pair(const Rational& q) {
  return json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

json point_quad(const LatticePoint& x) {
  return json::array({integer_json(x.alpha.get_num()), integer_json(x.alpha.get_den()),
                      integer_json(x.beta.get_num()), integer_json(x.beta.get_den())});
}

json direction_json(const Direction& d) {
  if (!d.is_exact()) {
    return json{{"irrational", d.symbolic().tag}, {"angle", d.symbolic().angle}};
  }
  const auto& v = d.vector();
  return json::array({integer_json(v.alpha.get_num()), integer_json(v.beta.get_num())});
}

json boundary_json(const BoundaryPoint& bp) {
  return json{{"side", bp.side}, {"t", rational_pair(bp.t)}};
}

json prefractal_json(const Prefractal& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices()) vertices.push_back(point_quad(v));
  return json{{"level", p.level()}, {"vertices", std::move(vertices)}};
}

json orbit_json(const Orbit& o) {
  json footprint = json::array();
  for (const auto& fp : o.footprint) {
    json f = boundary_json(fp.point);
    f["dir"] = direction_json(Direction::exact(fp.direction));
    f["type"] = to_string(classify(fp.point.t));
    footprint.push_back(std::move(f));
  }
  json initial = boundary_json(o.initial.point);
  initial["dir"] = direction_json(o.initial.direction);
  return json{{"level", o.level},
              {"initial", std::move(initial)},
              {"status", status_json(o.status)},
              {"footprint", std::move(footprint)}};
}

json sequence_json(const CompatibleSequence& seq) {
  json members = json::array();
  for (const auto& m : seq.members) {
    json row{{"level", m.level}, {"status", status_json(m.orbit.status)}};
    if (m.initial) row["initial"] = boundary_json(m.initial->point);
    if (m.orbit.is_closed()) row["hybrid"] = is_hybrid(m.orbit);
    std::map<std::string, std::size_t> histogram;
    for (const auto& fp : m.orbit.footprint) ++histogram[to_string(classify(fp.point.t))];
    row["types"] = histogram;
    members.push_back(std::move(row));
  }
  return json{{"direction", direction_json(seq.theta)},
              {"first_level", seq.first_level},
              {"last_level", seq.last_level},
              {"members", std::move(members)}};
}

json census_json(const SurfaceCensus& s) {
  json cones = json::array();
  for (const auto& c : s.cone_points) cones.push_back(json{{"multiple", c.multiple}, {"count", c.count}});
  return json{{"level", s.level},
              {"euler_characteristic", s.euler_characteristic},
              {"euler_from_angles", s.euler_from_angles},
              {"genus", s.genus},
              {"acute", s.angles.acute},
              {"reflex", s.angles.reflex},
              {"cone_points", std::move(cones)},
              {"cover_degree", s.cover_degree},
              {"copies", s.num_copies}};
}

json tiling_json(const HexTiling& h) {
  json centers = json::array();
  for (const auto& c : h.centers) centers.push_back(point_quad(c));
  json singular = json::array();
  for (const auto& s : h.singularities) {
    singular.push_back(json{{"vertex", s.vertex}, {"triangles", s.triangles}, {"centered", s.centered}});
  }
  return json{{"level", h.level},
              {"scale", h.scale},
              {"copies", h.copies},
              {"triangles", h.triangle_count},
              {"tiled_twice_area", rational_pair(h.tiled_twice_area)},
              {"area_matches", h.area_matches},
              {"centers", std::move(centers)},
              {"singularities", std::move(singular)},
              {"all_centered", h.all_centered}};
}

json path_json(const PolygonalPath& path) {
  json vertices = json::array();
  for (const auto& v : path.vertices) {
    vertices.push_back(json{{"level", v.level},
                            {"side", v.point.side},
                            {"t", rational_pair(v.point.t)},
                            {"point", point_quad(v.position)},
                            {"type", to_string(v.type)}});
  }
  json seed = boundary_json(path.seed.point);
  seed["level"] = path.seed.point.level;
  seed["dir"] = direction_json(path.seed.direction);
  return json{{"seed", std::move(seed)},
              {"vertices", std::move(vertices)},
              {"gaps", path.gaps()},
              {"length", path.length()},
              {"limit",
               json{{"point", point_quad(path.limit.point)},
                    {"x", path.limit.x},
                    {"y", path.limit.y},
                    {"error_bound", path.limit.error_bound},
                    {"off_boundary", path.limit.off_boundary}}}};
}

json combined_json(const CombinedPath& path) {
  json vertices = json::array();
  for (const auto& v : path.vertices) vertices.push_back(point_quad(v));
  json squared = json::array();
  for (const auto& q : path.squared_lengths) squared.push_back(rational_pair(q));
  return json{{"vertices", std::move(vertices)},
              {"squared_lengths", std::move(squared)},
              {"length", path.length},
              {"degenerate", path.degenerate}};
}

json probe_json(const ProbeReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back(json{{"level", l.level},
                          {"basepoints", l.basepoints},
                          {"strict_alternation", l.strict_alternation},
                          {"cantor_isolated", l.cantor_isolated},
                          {"cantor_count", l.cantor_count},
                          {"c_class_count", l.c_class_count}});
  }
  json gaps = json::array();
  for (double g : r.gaps) gaps.push_back(finite_or_null(g));
  json ratios = json::array();
  for (double g : r.gap_ratios) ratios.push_back(finite_or_null(g));
  return json{{"levels", std::move(levels)},
              {"alternation_observed", r.alternation_observed},
              {"gaps", std::move(gaps)},
              {"gap_ratios", std::move(ratios)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace koch::tools
