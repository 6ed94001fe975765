#pragma once

#include <vector>

#include "bgpoly/budgets.hpp"
#include "bgpoly/graph.hpp"
#include "bgpoly/poly.hpp"

namespace bgpoly {

// Hypergraph with an ordered hyperedge list (multiset allowed) over vertices
// 1..vertex_count. The associated bipartite incidence graph must be connected.
class Hypergraph {
 public:
  Hypergraph(int vertex_count, std::vector<std::vector<int>> hyperedges);

  int vertex_count() const { return m_; }
  const std::vector<std::vector<int>>& hyperedges() const { return edges_; }

  // Incidence graph: vertices 1..m, then hyperedge nodes m+1..m+n.
  Graph bip() const;

 private:
  int m_;
  std::vector<std::vector<int>> edges_;
};

// Degree deficiencies f(e) = deg(e) - 1 induced by a spanning tree of Bip H.
using Hypertree = std::vector<int>;

enum class SideSelector { Left, Right };

// The chosen side of the canonical bipartition becomes the ordered hyperedge
// list (ascending label); the other side becomes the vertex set. Requires a
// connected bipartite graph with at least one edge.
Hypergraph hypergraph_from_bipartite(const Graph& b, SideSelector edge_side);

// All hypertrees, via exhaustive spanning-tree enumeration; sorted, deduped.
std::vector<Hypertree> hypertrees(const Hypergraph& h, const Budgets& budgets = {});

// Generating function of internal inactivity over all hypertrees: hyperedge
// e_j counts as inactive for f when f(e_j) >= 1 and some earlier slot can
// absorb one unit so that a hypertree results.
IntPolynomial interior_polynomial_oracle(const Hypergraph& h, const Budgets& budgets = {});

// sum_k set_counts[k] x^k from the matching profile; equals the interior
// polynomial of the hat construction for bipartite g.
IntPolynomial interior_hat_via_matchings(const Graph& g, const Budgets& budgets = {});

// (x+1)^d I(4x/(x+1)^2) with I = interior_hat_via_matchings(g); bipartite only.
IntPolynomial hstar_bg_fast(const Graph& g, const Budgets& budgets = {});

// sum_j 2^j (x-1)^(d-j) sum over induced subgraphs H with j vertices of the
// edge-polytope h* of the looped-apex extension of H. Works for any graph;
// exponential in the vertex count.
IntPolynomial hstar_bg_subgraph_formula(const Graph& g, const Budgets& budgets = {});

// Copy with hyperedges[i] = h.hyperedges[perm[i]]; perm must be a permutation.
Hypergraph permute_hyperedges(const Hypergraph& h, const std::vector<int>& perm);

}  // namespace bgpoly
