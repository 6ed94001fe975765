#pragma once

// Generators and brute-force oracles shared by the test suites. Everything
// here is independent of the library's fast paths: cycles come from subset
// enumeration, matchings from edge-subset enumeration, and graph lists from
// canonical forms over all vertex permutations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bgpoly/graph.hpp"
#include "bgpoly/poset.hpp"

namespace testutil {

using bgpoly::Edge;
using bgpoly::Graph;

inline Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(1, n);
  return Graph(n, std::move(es));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) es.emplace_back(u, v);
  }
  return Graph(n, std::move(es));
}

inline Graph complete_bipartite(int p, int q) {
  std::vector<Edge> es;
  for (int u = 1; u <= p; ++u) {
    for (int v = p + 1; v <= p + q; ++v) es.emplace_back(u, v);
  }
  return Graph(p + q, std::move(es));
}

inline Graph empty_graph(int n) { return Graph(n, {}); }

// pair index of {u, v} (1-based, u < v) among the C(n,2) vertex pairs
inline int pair_index(int n, int u, int v) {
  int idx = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (a == u && b == v) return idx;
      ++idx;
    }
  }
  return -1;
}

inline Graph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> es;
  int idx = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if ((mask >> idx) & 1) es.emplace_back(a, b);
      ++idx;
    }
  }
  return Graph(n, std::move(es));
}

inline std::vector<Graph> all_graphs(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
    out.push_back(graph_from_mask(n, mask));
  }
  return out;
}

// Isomorphism-class representatives on exactly n vertices via the minimum
// edge-mask over all vertex permutations.
inline std::vector<Graph> graph_reps(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> canon;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
    std::uint32_t best = mask;
    for (const auto& p : perms) {
      std::uint32_t img = 0;
      int idx = 0;
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          if ((mask >> idx) & 1) {
            int u = p[a - 1], v = p[b - 1];
            if (u > v) std::swap(u, v);
            img |= std::uint32_t{1} << pair_index(n, u, v);
          }
          ++idx;
        }
      }
      if (img < best) best = img;
    }
    canon.insert(best);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask : canon) out.push_back(graph_from_mask(n, mask));
  return out;
}

inline std::vector<Graph> graph_reps_upto(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    for (auto& g : graph_reps(k)) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<Graph> bipartite_reps_upto(int n) {
  std::vector<Graph> out;
  for (auto& g : graph_reps_upto(n)) {
    if (bgpoly::bipartition(g)) out.push_back(std::move(g));
  }
  return out;
}

// ---- brute-force oracles ----

// Vertex sets of induced cycles of length >= min_len, by subset enumeration.
inline std::set<std::vector<int>> brute_induced_cycle_sets(const Graph& g, int min_len) {
  const int n = g.vertex_count();
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v) {
      if ((mask >> (v - 1)) & 1) verts.push_back(v);
    }
    if (static_cast<int>(verts.size()) < std::max(3, min_len)) continue;
    bool all_deg_two = true;
    for (int v : verts) {
      int deg = 0;
      for (int u : verts) {
        if (u != v && g.has_edge(u, v)) ++deg;
      }
      if (deg != 2) { all_deg_two = false; break; }
    }
    if (!all_deg_two) continue;
    // connected 2-regular induced subgraph == induced cycle
    std::set<int> seen{verts[0]};
    std::vector<int> stack{verts[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : verts) {
        if (u != v && g.has_edge(u, v) && !seen.count(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
      }
    }
    if (seen.size() == verts.size()) out.insert(verts);
  }
  return out;
}

// (set_counts, matching_counts) by enumerating all edge subsets.
inline std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
brute_matching_profile(const Graph& g) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::map<int, std::set<std::uint64_t>> sets;
  std::map<int, std::uint64_t> counts;
  counts[0] = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    int k = 0;
    for (int e = 0; e < m && ok; ++e) {
      if (!((mask >> e) & 1)) continue;
      std::uint64_t em = (std::uint64_t{1} << (edges[e].first - 1)) |
                         (std::uint64_t{1} << (edges[e].second - 1));
      if (em & used) ok = false;
      used |= em;
      ++k;
    }
    if (!ok) continue;
    counts[k] += 1;
    sets[k].insert(used);
  }
  int kmax = counts.rbegin()->first;
  std::vector<std::uint64_t> sc, mc;
  for (int k = 0; k <= kmax; ++k) {
    mc.push_back(counts.count(k) ? counts[k] : 0);
    sc.push_back(sets.count(k) ? sets[k].size() : 0);
  }
  return {sc, mc};
}

// ---- unlabeled trees and forests ----

namespace detail {

inline std::string ahu_rooted(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int u : adj[v]) {
    if (u != parent) kids.push_back(ahu_rooted(adj, u, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::string tree_canon(int n, const std::vector<Edge>& edges) {
  if (n == 1) return "()";
  std::vector<std::vector<int>> adj(n);
  std::vector<int> deg(n, 0);
  for (const auto& [u, v] : edges) {
    adj[u - 1].push_back(v - 1);
    adj[v - 1].push_back(u - 1);
  }
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  // peel leaves to find the one or two centers
  std::vector<int> layer;
  std::vector<bool> removed(n, false);
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    if (deg[v] <= 1) layer.push_back(v);
  }
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int u : adj[v]) {
        if (!removed[u] && --deg[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    std::string s = ahu_rooted(adj, v, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

inline std::vector<Edge> tree_from_pruefer(const std::vector<int>& code, int n) {
  std::vector<int> degree(n + 1, 1);
  for (int v : code) degree[v] += 1;
  std::vector<Edge> edges;
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<int> work = code;
  for (int v : work) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[v] == 1) leaves.insert(v);
  }
  int a = *leaves.begin(), b = *leaves.rbegin();
  edges.emplace_back(a, b);
  return edges;
}

}  // namespace detail

// Unlabeled trees on exactly n vertices, one representative each.
inline std::vector<Graph> unlabeled_trees(int n) {
  if (n == 1) return {empty_graph(1)};
  if (n == 2) return {Graph(2, {{1, 2}})};
  std::map<std::string, Graph> canon;
  std::vector<int> code(n - 2, 1);
  while (true) {
    auto edges = detail::tree_from_pruefer(code, n);
    canon.emplace(detail::tree_canon(n, edges), Graph(n, edges));
    int i = n - 3;
    while (i >= 0 && code[i] == n) code[i--] = 1;
    if (i < 0) break;
    code[i] += 1;
  }
  std::vector<Graph> out;
  for (auto& [key, g] : canon) out.push_back(std::move(g));
  return out;
}

// Unlabeled forests with at most n vertices in total (multisets of trees,
// components relabeled consecutively).
inline std::vector<Graph> forests_upto(int n) {
  std::vector<Graph> trees;
  for (int k = 1; k <= n; ++k) {
    for (auto& t : unlabeled_trees(k)) trees.push_back(std::move(t));
  }
  std::vector<Graph> out;
  std::vector<int> chosen;
  auto assemble = [&]() {
    int total = 0;
    for (int idx : chosen) total += trees[idx].vertex_count();
    std::vector<Edge> es;
    int base = 0;
    for (int idx : chosen) {
      for (const auto& [u, v] : trees[idx].edges()) es.emplace_back(base + u, base + v);
      base += trees[idx].vertex_count();
    }
    out.emplace_back(total, std::move(es));
  };
  auto rec = [&](auto&& self, int from, int budget) -> void {
    if (!chosen.empty()) assemble();
    for (int i = from; i < static_cast<int>(trees.size()); ++i) {
      int sz = trees[i].vertex_count();
      if (sz > budget) continue;
      chosen.push_back(i);
      self(self, i, budget - sz);
      chosen.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

// All naturally labeled posets on [d]: transitively closed subsets of the
// ascending pairs.
inline std::vector<bgpoly::Poset> natural_posets(int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= d; ++u) {
    for (int v = u + 1; v <= d; ++v) pairs.emplace_back(u, v);
  }
  const int np = static_cast<int>(pairs.size());
  std::vector<bgpoly::Poset> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << np); ++mask) {
    std::vector<std::vector<bool>> rel(d + 1, std::vector<bool>(d + 1, false));
    for (int i = 0; i < np; ++i) {
      if ((mask >> i) & 1) rel[pairs[i].first][pairs[i].second] = true;
    }
    bool transitive = true;
    for (int u = 1; u <= d && transitive; ++u) {
      for (int v = u + 1; v <= d && transitive; ++v) {
        for (int w = v + 1; w <= d && transitive; ++w) {
          if (rel[u][v] && rel[v][w] && !rel[u][w]) transitive = false;
        }
      }
    }
    if (!transitive) continue;
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < np; ++i) {
      if ((mask >> i) & 1) rels.push_back(pairs[i]);
    }
    out.emplace_back(d, std::move(rels));
  }
  return out;
}

}  // namespace testutil
