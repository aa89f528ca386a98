#include "koch_tools/sweep.hpp"

#include <atomic>
#include <thread>

#include "koch/errors.hpp"

namespace koch::tools {

std::vector<FamilyParams> family_grid(long max_s) {
  std::vector<FamilyParams> grid;
  const long odd[] = {1, 3, 5};
  for (long a : odd) {
    for (long b : odd) {
      for (long s = 1; s <= max_s; ++s) {
        for (long r = 1; r < (1L << (2 * s)); r += 2) grid.push_back({1, a, b, r, s});
      }
    }
  }
  for (long b : odd) {
    for (long s = 1; s <= max_s; ++s) {
      for (long r = 1; r < (1L << s); r += 2) grid.push_back({2, 1, b, r, s});
    }
  }
  return grid;
}

namespace {

SweepResult run_one(const FamilyParams& q, int last_level, int cap) {
  SweepResult out;
  out.params = q;
  try {
    const CompatibleSequence seq = build_sequence(family_seed(q), last_level, kDefaultMaxSteps, cap);
    out.ok = true;
    for (const auto& m : seq.members) {
      SweepLevel row;
      row.level = m.level;
      row.status = status_name(m.orbit.status);
      if (m.orbit.is_periodic()) row.period = m.orbit.period();
      row.hybrid = m.orbit.is_closed() && is_hybrid(m.orbit);
      if (out.ok && !m.orbit.is_periodic()) {
        out.ok = false;
        out.failure = "level " + std::to_string(m.level) + " is " + row.status;
      } else if (out.ok && !row.hybrid) {
        out.ok = false;
        out.failure = "level " + std::to_string(m.level) + " is not hybrid";
      }
      out.levels.push_back(row);
    }
    out.all_closed = dichotomy_check(seq) == Dichotomy::AllClosed;
  } catch (const Error& e) {
    out.ok = false;
    out.failure = e.what();
  }
  return out;
}

}  // namespace

std::vector<SweepResult> run_sweep(const std::vector<FamilyParams>& grid, int last_level,
                                   unsigned jobs, int cap) {
  if (last_level < 0) throw DomainError("level must be nonnegative");
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<SweepResult> results(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      results[i] = run_one(grid[i], last_level, cap);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace koch::tools
