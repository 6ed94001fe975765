#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "bgpoly/bigint.hpp"
#include "bgpoly/budgets.hpp"
#include "bgpoly/graph.hpp"
#include "bgpoly/poly.hpp"

namespace bgpoly {

// normal . x <= rhs (or == rhs when used as a span equation); normal is a
// primitive integer vector.
struct Halfspace {
  std::vector<Int> normal;
  Int rhs;
  bool operator==(const Halfspace&) const = default;
};

struct EhrhartData {
  int dimension = 0;          // affine dimension D
  std::vector<Int> counts;    // L(0..D)
  IntPolynomial hstar;
};

struct IdpResult {
  bool idp = true;
  int failed_dilation = 0;                  // 0 when idp
  std::optional<std::vector<Int>> witness;  // a point of k.P with no k-split
};

// Convex hull of integer generators, with an exact facet description computed
// on demand (shared between copies, safe to request concurrently).
class LatticePolytope {
 public:
  LatticePolytope(int ambient_dim, std::vector<std::vector<Int>> generators,
                  Budgets budgets = {});

  int ambient_dim() const { return ambient_; }
  const std::vector<std::vector<Int>>& generators() const { return gens_; }
  const Budgets& budgets() const { return budgets_; }

  int affine_dim() const;
  const std::vector<Halfspace>& facets() const;          // irredundant, sorted
  const std::vector<Halfspace>& span_equations() const;  // affine-hull cut

  bool contains_in_dilate(const std::vector<Int>& point, int n) const;

  // Integer points of the n-th dilate, lexicographically sorted.
  std::vector<std::vector<Int>> lattice_points(int n) const;
  Int lattice_point_count(int n) const;

 private:
  struct FacetData {
    int affine_dim = 0;
    std::vector<Halfspace> facets;
    std::vector<Halfspace> equations;
  };
  struct Cache {
    std::once_flag once;
    FacetData data;
  };
  const FacetData& facet_data() const;

  int ambient_;
  std::vector<std::vector<Int>> gens_;
  Budgets budgets_;
  std::shared_ptr<Cache> cache_;
};

// conv{0, +-e_i, +-e_i +- e_j over edges of g} in Z^d.
LatticePolytope build_bg(const Graph& g, Budgets budgets = {});

// conv{e_i + e_j per edge, 2 e_i per loop}; rejects edgeless input.
LatticePolytope edge_polytope(const LoopGraph& h, Budgets budgets = {});
LatticePolytope edge_polytope(const Graph& g, Budgets budgets = {});

// h*_k = sum_{i<=k} (-1)^i C(D+1, i) L(k-i) from brute-force counts L(1..D).
// Verifies Stanley nonnegativity and that h* reproduces the counts.
EhrhartData ehrhart_hstar(const LatticePolytope& p);

Int normalized_volume(const LatticePolytope& p);

// Every primitive facet inequality has right-hand side exactly 1. Requires a
// full-dimensional polytope with the origin strictly inside.
bool is_reflexive(const LatticePolytope& p);

// Checks that lattice points of k.P split as sums of k lattice points of P for
// k = 2..kmax; on failure reports the smallest offending dilate and point.
IdpResult is_idp(const LatticePolytope& p, int kmax);

// conv(generators lying in the closed orthant given by signs in {-1, +1}^d).
LatticePolytope orthant_restriction(const LatticePolytope& p, const std::vector<int>& signs);

}  // namespace bgpoly
