#include "bgpoly/budgets.hpp"

#include <cstdlib>
#include <string>

namespace bgpoly {

namespace {

void read_u64(const char* name, std::uint64_t* slot) {
  const char* raw = std::getenv(name);
  if (!raw) return;
  try {
    *slot = std::stoull(raw);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + " must be an unsigned integer");
  }
}

void read_int(const char* name, int* slot) {
  const char* raw = std::getenv(name);
  if (!raw) return;
  try {
    *slot = std::stoi(raw);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + " must be an integer");
  }
}

}  // namespace

Budgets Budgets::from_env() {
  Budgets b;
  read_u64("BGPOLY_BUDGET_POINTS", &b.points);
  read_u64("BGPOLY_BUDGET_TREES", &b.trees);
  read_u64("BGPOLY_BUDGET_CYCLES", &b.cycles);
  read_u64("BGPOLY_BUDGET_EXTENSIONS", &b.extensions);
  read_u64("BGPOLY_BUDGET_MATCHINGS", &b.matchings);
  read_int("BGPOLY_HULL_DIM_CAP", &b.hull_dim_cap);
  read_int("BGPOLY_ORDERING_SIDE_CAP", &b.ordering_side_cap);
  return b;
}

}  // namespace bgpoly
