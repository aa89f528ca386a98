#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koch/billiard.hpp"

namespace koch::tools {

struct NamedAngle {
  std::string_view name;
  double radians;
  long alpha;  // lattice direction alpha*u1 + beta*u2
  long beta;
};

/// Angles measured from the base, counterclockwise.
const std::vector<NamedAngle>& named_angles();

/// "a,b" lattice pair, or a name from named_angles(). Throws DomainError.
Direction parse_direction(const std::string& text);

/// "a..b" or a single level. Throws DomainError.
std::pair<int, int> parse_levels(const std::string& text);

struct Preset {
  std::string_view name;
  std::string_view t;
  long alpha;
  long beta;
  std::string_view note;
};

const std::vector<Preset>& presets();
std::optional<Preset> find_preset(std::string_view name);

/// Table rendered into --help.
std::string direction_help();

}  // namespace koch::tools
