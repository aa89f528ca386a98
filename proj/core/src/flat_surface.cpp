#include "koch/flat_surface.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "koch/errors.hpp"

namespace koch {

namespace {

// Interior angle of vertex i as a multiple of pi/3 (1 or 4).
int angle_sixths(const Prefractal& p, std::size_t i) {
  const auto& v = p.vertices();
  const std::size_t count = v.size();
  const LatticeVector in = v[i] - v[(i + count - 1) % count];
  const LatticeVector out = v[(i + 1) % count] - v[i];
  const Rational dot = lattice_dot(in, out);
  const Rational cross = lattice_cross(in, out);
  const Rational cos2 = dot * dot / (squared_length(in) * squared_length(out));
  if (cos2 == make_rational(1, 4)) {
    if (sgn(cross) > 0 && sgn(dot) < 0) return 1;  // turn of 2pi/3
    if (sgn(cross) < 0 && sgn(dot) > 0) return 4;  // turn of -pi/3
  }
  throw VerificationError("vertex " + std::to_string(i) + " has an unexpected interior angle");
}

Integer pow_int(unsigned long base, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

}  // namespace

AngleCensus vertex_angle_census(const Prefractal& p) {
  AngleCensus c;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (angle_sixths(p, i) == 1) ++c.acute;
    else ++c.reflex;
  }
  return c;
}

SurfaceCensus surface_census(int n, int cap) {
  const Prefractal p = build_prefractal(n, cap);
  SurfaceCensus s;
  s.level = n;
  s.angles = vertex_angle_census(p);

  // Angle pi*a/b in lowest terms per vertex; N is the lcm of the b's.
  struct Angle {
    long p;
    long q;
  };
  std::vector<Angle> angles;
  angles.reserve(p.vertices().size());
  long big_n = 1;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const Rational a = make_rational(angle_sixths(p, i), 3);
    angles.push_back({a.get_num().get_si(), a.get_den().get_si()});
    big_n = std::lcm(big_n, angles.back().q);
  }
  Rational inverse_sum = 0;
  for (const auto& a : angles) inverse_sum += make_rational(1, a.q);
  const long nu = static_cast<long>(angles.size());
  const Rational chi = Rational(big_n) * inverse_sum - Rational(big_n * nu) + Rational(2 * big_n);
  if (chi.get_den() != 1) throw VerificationError("Euler characteristic is not an integer");
  s.euler_characteristic = chi.get_num().get_si();
  if ((2 - s.euler_characteristic) % 2 != 0) throw VerificationError("odd 2 - chi");
  s.genus = (2 - s.euler_characteristic) / 2;

  // Each vertex of angle pi*a/q yields N/q cone points of angle 2pi*a.
  std::map<long long, long long> cones;
  for (const auto& a : angles) cones[a.p] += big_n / a.q;
  long long gauss_bonnet = 0;
  for (const auto& [multiple, count] : cones) {
    s.cone_points.push_back({multiple, count});
    gauss_bonnet += (1 - multiple) * count;
  }
  s.euler_from_angles = gauss_bonnet;

  // 6 copies of the polygon over the hexagon of 6 triangles of side 3^-(n+1).
  const Rational degree = p.area_ratio() * Rational(pow_int(9, static_cast<unsigned long>(n + 1)));
  if (degree.get_den() != 1) throw VerificationError("cover degree is not an integer");
  s.cover_degree = degree.get_num().get_si();
  return s;
}

HexTiling hex_tiling(int n, int k, int cap) {
  if (n < 0) throw DomainError("level must be nonnegative");
  if (k <= n) throw DomainError("tile scale must exceed the level");
  const Prefractal p = build_prefractal(n, cap);
  HexTiling h;
  h.level = n;
  h.scale = k;
  const long scale = pow_int(3, static_cast<unsigned long>(k)).get_si();
  const Rational unit(Integer(1), Integer(scale));

  long lo_i = 0, hi_i = 0, lo_j = 0, hi_j = 0;
  for (const auto& v : p.vertices()) {
    const long i = Rational(v.alpha * scale).get_num().get_si();
    const long j = Rational(v.beta * scale).get_num().get_si();
    lo_i = std::min(lo_i, i);
    hi_i = std::max(hi_i, i);
    lo_j = std::min(lo_j, j);
    hi_j = std::max(hi_j, j);
  }

  // Triangles of one copy, counted per class-0 corner.
  std::map<std::pair<long, long>, std::size_t> per_center;
  for (long i = lo_i - 1; i <= hi_i; ++i) {
    for (long j = lo_j - 1; j <= hi_j; ++j) {
      for (bool up : {true, false}) {
        const LatticePoint centroid = up ? LatticePoint(Rational(3 * i + 1, 3 * scale), Rational(3 * j + 1, 3 * scale))
                                         : LatticePoint(Rational(3 * i + 2, 3 * scale), Rational(3 * j + 2, 3 * scale));
        if (!p.contains_strictly(centroid)) continue;
        ++h.triangle_count;
        const std::array<std::pair<long, long>, 3> corners =
            up ? std::array<std::pair<long, long>, 3>{{{i, j}, {i + 1, j}, {i, j + 1}}}
               : std::array<std::pair<long, long>, 3>{{{i + 1, j}, {i + 1, j + 1}, {i, j + 1}}};
        for (const auto& c : corners) {
          if (((c.first - c.second) % 3 + 3) % 3 == 0) ++per_center[c];
        }
      }
    }
  }
  h.tiled_twice_area = Rational(static_cast<long>(h.triangle_count)) * unit * unit;
  h.area_matches = h.tiled_twice_area == p.twice_signed_area();
  for (const auto& [c, count] : per_center) {
    h.centers.emplace_back(Rational(c.first) * unit, Rational(c.second) * unit);
  }

  h.all_centered = true;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    HexSingularity s;
    s.vertex = v;
    s.point = p.vertices()[v];
    const long i = Rational(s.point.alpha * scale).get_num().get_si();
    const long j = Rational(s.point.beta * scale).get_num().get_si();
    const auto it = per_center.find({i, j});
    s.triangles = it == per_center.end() ? 0 : it->second;
    const bool class0 = ((i - j) % 3 + 3) % 3 == 0;
    s.centered = class0 && s.triangles == static_cast<std::size_t>(angle_sixths(p, v));
    h.all_centered = h.all_centered && s.centered;
    h.singularities.push_back(s);
  }
  return h;
}

CoverReport cover_consistency(int n, int cap) {
  if (n < 1) throw DomainError("cover consistency is defined for n >= 1");
  const SurfaceCensus s = surface_census(n, cap);
  CoverReport r;
  r.level = n;
  r.degree = s.cover_degree;
  if (r.degree <= 0) throw VerificationError("cover degree is not positive");
  for (const auto& c : s.cone_points) {
    if (c.multiple > 1) r.ramification_sum += (c.multiple - 1) * c.count;
  }
  r.riemann_hurwitz_ok = s.euler_characteristic == -r.ramification_sum;
  return r;
}

}  // namespace koch
