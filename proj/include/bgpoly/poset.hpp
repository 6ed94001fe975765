#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bgpoly/budgets.hpp"
#include "bgpoly/graph.hpp"
#include "bgpoly/poly.hpp"

namespace bgpoly {

// Naturally labeled poset on 1..d: every stated relation u < v must also hold
// between the integer labels; anything else is rejected at construction.
class Poset {
 public:
  Poset(int size, std::vector<std::pair<int, int>> relations);

  int size() const { return d_; }
  bool less(int u, int v) const;  // strict comparability in the closure
  const std::vector<std::uint64_t>& below_masks() const { return below_; }

  // Text format: first non-comment line is the element count, then one
  // relation "u < v" per line; '#' starts a comment line.
  static Poset parse(std::istream& in);
  static Poset parse(const std::string& text);

 private:
  int d_;
  std::vector<std::uint64_t> below_;  // below_[v-1] = bitmask of u with u < v
};

// Descent generating function over all linear extensions.
IntPolynomial eulerian_polynomial(const Poset& p, const Budgets& budgets = {});

// Order polynomial values Omega(P, 1..m_max): counts of order-preserving maps
// into a chain of the given length.
std::vector<Int> order_polynomial_values(const Poset& p, int m_max,
                                         const Budgets& budgets = {});

// Two disjoint chains 1 < ... < p and p+1 < ... < p+q.
Poset two_chain_poset(int p, int q);

// Graph on the elements whose edges are the incomparable pairs.
Graph complement_comparability_graph(const Poset& p);

// sum_i C(p,i) C(q,i) x^i: the descent polynomial of two disjoint chains.
IntPolynomial kpq_w(int p, int q);

// sum_i 4^i C(p,i) C(q,i) x^i (x+1)^(p+q-2i), expanded exactly.
IntPolynomial kpq_hstar(int p, int q);

}  // namespace bgpoly
