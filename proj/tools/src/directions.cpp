#include "koch_tools/directions.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "koch/errors.hpp"

namespace koch::tools {

const std::vector<NamedAngle>& named_angles() {
  using std::numbers::pi;
  static const std::vector<NamedAngle> table{
      {"pi/6", pi / 6, 1, 1},
      {"pi/3", pi / 3, 0, 1},
      {"pi/2", pi / 2, -1, 2},
      {"2pi/3", 2 * pi / 3, -1, 1},
      {"5pi/6", 5 * pi / 6, -2, 1},
  };
  return table;
}

namespace {

long parse_long(std::string_view s, const std::string& whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("cannot parse '" + whole + "'");
  }
  return v;
}

}  // namespace

Direction parse_direction(const std::string& text) {
  for (const auto& a : named_angles()) {
    if (text == a.name) return Direction::exact(LatticeVector(a.alpha, a.beta));
  }
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("unknown direction '" + text + "'");
  const long a = parse_long(std::string_view(text).substr(0, comma), text);
  const long b = parse_long(std::string_view(text).substr(comma + 1), text);
  if (a == 0 && b == 0) throw DomainError("zero direction");
  return Direction::exact(LatticeVector(a, b));
}

std::pair<int, int> parse_levels(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = static_cast<int>(parse_long(text, text));
    return {n, n};
  }
  const int a = static_cast<int>(parse_long(std::string_view(text).substr(0, dots), text));
  const int b = static_cast<int>(parse_long(std::string_view(text).substr(dots + 2), text));
  if (a < 0 || b < a) throw DomainError("bad level range '" + text + "'");
  return {a, b};
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table{
      {"midpoint", "1/2", 2, 1, "base midpoint; orbits grow quickly with the level"},
      {"hook", "3/4", -2, 1, "retracing orbit through a perpendicular foot"},
      {"constant", "7/12", 0, 1, "footprint constant from level 1 on"},
  };
  return table;
}

std::optional<Preset> find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

std::string direction_help() {
  std::ostringstream out;
  out << "Directions are lattice pairs A,B meaning A*u1 + B*u2 with u1 = (1,0),\n"
         "u2 = (1/2, sqrt(3)/2), or one of the names:\n";
  for (const auto& a : named_angles()) {
    out << "  " << a.name << " = (" << a.alpha << "," << a.beta << ")\n";
  }
  out << "Presets (--seed), all on the base of KS_0:\n";
  for (const auto& p : presets()) {
    out << "  " << p.name << ": t = " << p.t << ", dir (" << p.alpha << "," << p.beta << "), " << p.note
        << "\n";
  }
  return out.str();
}

}  // namespace koch::tools
