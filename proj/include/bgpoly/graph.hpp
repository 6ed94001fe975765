#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgpoly/budgets.hpp"

namespace bgpoly {

using Edge = std::pair<int, int>;  // 1-based endpoints, stored with first < second

// Finite simple undirected graph on vertices 1..d. Edges are kept sorted and
// validated at construction, so equal (d, edges) means equal graphs.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return d_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v - 1]; }

  // Adjacency bitmask with bit (v-1); only for graphs with at most 64 vertices.
  std::uint64_t adjacency_mask(int v) const;

  bool operator==(const Graph& other) const {
    return d_ == other.d_ && edges_ == other.edges_;
  }

  // Edge-list text format: first non-comment line is the vertex count, then
  // one "u v" pair per line. Lines starting with '#' are comments.
  static Graph parse_edge_list(std::istream& in);
  static Graph parse_edge_list(const std::string& text);

 private:
  int d_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Graph that may additionally carry loops (at most one per vertex).
struct LoopGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;  // proper edges, sorted, first < second
  std::vector<int> loops;   // looped vertices, sorted
};

// Canonical bipartition: per component, the side holding the component's
// smallest vertex goes to `left`.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

// set_counts[k] = number of distinct vertex sets covered by k-matchings,
// matching_counts[k] = number of k-matchings.
struct MatchingProfile {
  std::vector<std::uint64_t> set_counts;
  std::vector<std::uint64_t> matching_counts;
};

// A connected piece with its relabeling: new vertex i+1 was original_vertices[i].
struct Component {
  Graph graph;
  std::vector<int> original_vertices;
};

// Witness orderings for the strong-ordering property of a bipartite graph.
struct VertexOrders {
  std::vector<int> left;
  std::vector<int> right;
};

std::optional<Bipartition> bipartition(const Graph& g);

std::vector<Component> components(const Graph& g);

// All chordless (induced) cycles of length >= min_len, each listed once as a
// vertex sequence starting at its smallest vertex with the smaller neighbor
// second. Sorted lexicographically.
std::vector<std::vector<int>> chordless_cycles(const Graph& g, int min_len,
                                               const Budgets& budgets = {});

// Odd cycle condition: every two vertex-disjoint odd cycles are joined by an
// edge. Equivalent to the same condition restricted to chordless odd cycles.
bool satisfies_occ(const Graph& g, const Budgets& budgets = {});

// Bipartite with no chordless cycle of length >= 6.
bool is_chordal_bipartite(const Graph& g, const Budgets& budgets = {});

// G plus an apex vertex d+1 adjacent to everything and carrying a loop.
LoopGraph tilde(const Graph& g);

// For bipartite G with bipartition V1 | V2: adds vertex d+1 adjacent to V1 and
// vertex d+2 adjacent to V2 and to d+1. The result is connected and bipartite.
Graph hat(const Graph& g, const Bipartition& b);
Graph hat(const Graph& g);  // uses the canonical bipartition; throws if none

MatchingProfile matching_profile(const Graph& g, const Budgets& budgets = {});

Graph complement(const Graph& g);

// Searches for orderings <1 on V1 and <2 on V2 such that crossing pairs of
// edges force both swapped edges to exist. Exhaustive with pruning; sides
// larger than budgets.ordering_side_cap raise a resource error.
std::optional<VertexOrders> is_bipartite_permutation(const Graph& g,
                                                     const Budgets& budgets = {});

}  // namespace bgpoly
