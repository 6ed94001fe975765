#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bgpoly {

// Thrown when an enumeration exceeds its configured budget. Callers see a
// clean error instead of an unbounded computation; nothing is silently
// truncated.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration budgets. Library functions take these as an optional trailing
// parameter; the CLI populates them from flags and BGPOLY_BUDGET_* variables.
struct Budgets {
  std::uint64_t points = 100'000'000;      // lattice-scan node budget
  std::uint64_t trees = 10'000'000;        // spanning-tree enumeration budget
  std::uint64_t cycles = 1'000'000;        // chordless-cycle budget
  std::uint64_t extensions = 10'000'000;   // linear-extension budget
  std::uint64_t matchings = 10'000'000;    // matching enumeration budget
  int hull_dim_cap = 10;                   // ambient-dimension cap for facet enumeration
  int ordering_side_cap = 8;               // side-size cap for ordering search

  // Reads BGPOLY_BUDGET_POINTS, _TREES, _CYCLES, _EXTENSIONS, _MATCHINGS,
  // BGPOLY_HULL_DIM_CAP and BGPOLY_ORDERING_SIDE_CAP when set.
  static Budgets from_env();
};

// Counts work units against a limit and raises once it is crossed.
class BudgetMeter {
 public:
  BudgetMeter(std::uint64_t limit, const char* what) : limit_(limit), what_(what) {}

  void charge(std::uint64_t units = 1) {
    used_ += units;
    if (used_ > limit_) {
      throw resource_limit_error(std::string(what_) + " budget exceeded (" +
                                 std::to_string(limit_) + ")");
    }
  }

  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t limit_;
  const char* what_;
};

}  // namespace bgpoly
