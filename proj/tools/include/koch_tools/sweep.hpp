#pragma once

#include <string>
#include <vector>

#include "koch/compatibility.hpp"

namespace koch::tools {

/// Both seed families with b (and a) in {1,3,5}, s in {1..max_s}, all odd r.
std::vector<FamilyParams> family_grid(long max_s = 2);

struct SweepLevel {
  int level = 0;
  std::string status;
  std::size_t period = 0;
  bool hybrid = false;
};

struct SweepResult {
  FamilyParams params;
  std::vector<SweepLevel> levels;
  bool ok = false;
  bool all_closed = false;  // dichotomy verdict for the members that were built
  std::string failure;      // empty when ok
};

/// Builds each sequence over levels 0..last_level on `jobs` threads (0 means
/// hardware concurrency). Results keep the grid order.
std::vector<SweepResult> run_sweep(const std::vector<FamilyParams>& grid, int last_level,
                                   unsigned jobs = 0, int cap = kDefaultLevelCap);

}  // namespace koch::tools
