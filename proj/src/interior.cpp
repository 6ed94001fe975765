#include "bgpoly/interior.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bgpoly/polytope.hpp"

namespace bgpoly {

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> hyperedges)
    : m_(vertex_count), edges_(std::move(hyperedges)) {
  if (m_ <= 0) throw std::invalid_argument("hypergraph needs at least one vertex");
  if (edges_.empty()) throw std::invalid_argument("hypergraph needs at least one hyperedge");
  for (auto& e : edges_) {
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.front() < 1 || e.back() > m_) {
      throw std::invalid_argument("hyperedge vertex out of range");
    }
  }
  if (components(bip()).size() != 1) {
    throw std::invalid_argument("incidence graph of the hypergraph must be connected");
  }
}

Graph Hypergraph::bip() const {
  std::vector<Edge> es;
  const int n = static_cast<int>(edges_.size());
  for (int j = 0; j < n; ++j) {
    for (int v : edges_[j]) es.emplace_back(v, m_ + 1 + j);
  }
  return Graph(m_ + n, std::move(es));
}

Hypergraph hypergraph_from_bipartite(const Graph& b, SideSelector edge_side) {
  if (components(b).size() != 1) {
    throw std::invalid_argument("graph must be connected");
  }
  auto bp = bipartition(b);
  if (!bp) throw std::invalid_argument("graph is not bipartite");
  if (b.edge_count() == 0) throw std::invalid_argument("graph needs at least one edge");
  const std::vector<int>& edge_nodes = edge_side == SideSelector::Left ? bp->left : bp->right;
  const std::vector<int>& vertex_nodes = edge_side == SideSelector::Left ? bp->right : bp->left;
  std::vector<int> rank(b.vertex_count() + 1, 0);
  for (size_t i = 0; i < vertex_nodes.size(); ++i) rank[vertex_nodes[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> hyperedges;
  for (int u : edge_nodes) {
    std::vector<int> e;
    for (int v : b.neighbors(u)) e.push_back(rank[v]);
    hyperedges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(vertex_nodes.size()), std::move(hyperedges));
}

namespace {

struct TreeSearch {
  int n;                          // vertices of Bip H
  std::vector<Edge> edges;
  std::set<Hypertree>* sink;
  int hyperedge_base;             // hyperedge nodes are labels > hyperedge_base
  BudgetMeter meter;
  std::vector<int> degree;        // running degrees of hyperedge nodes

  TreeSearch(const Graph& bip, int base, std::set<Hypertree>* out, const Budgets& budgets)
      : n(bip.vertex_count()), edges(bip.edges()), sink(out), hyperedge_base(base),
        meter(budgets.trees, "spanning-tree enumeration") {
    degree.assign(n - base, 0);
  }

  int find(std::vector<int>& uf, int x) const {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  // connectivity of chosen forest plus edges from index i on
  bool can_still_connect(const std::vector<int>& uf, size_t i) {
    std::vector<int> probe = uf;
    int comps = 0;
    for (int v = 0; v < n; ++v) {
      if (find(probe, v) == v) ++comps;
    }
    for (size_t e = i; e < edges.size() && comps > 1; ++e) {
      int a = find(probe, edges[e].first - 1);
      int b = find(probe, edges[e].second - 1);
      if (a != b) {
        probe[a] = b;
        --comps;
      }
    }
    return comps == 1;
  }

  void record() {
    Hypertree f(degree.size());
    for (size_t j = 0; j < degree.size(); ++j) f[j] = degree[j] - 1;
    sink->insert(std::move(f));
  }

  void rec(std::vector<int> uf, size_t i, int chosen) {
    meter.charge();
    if (chosen == n - 1) {
      record();
      return;
    }
    if (edges.size() - i < static_cast<size_t>(n - 1 - chosen)) return;
    const auto& [u, v] = edges[i];
    int a = find(uf, u - 1), b = find(uf, v - 1);
    if (a != b) {
      std::vector<int> with = uf;
      with[a] = b;
      bump(u, +1);
      bump(v, +1);
      rec(std::move(with), i + 1, chosen + 1);
      bump(u, -1);
      bump(v, -1);
    }
    if (can_still_connect(uf, i + 1)) rec(std::move(uf), i + 1, chosen);
  }

  void bump(int vertex, int delta) {
    if (vertex > hyperedge_base) degree[vertex - hyperedge_base - 1] += delta;
  }
};

}  // namespace

std::vector<Hypertree> hypertrees(const Hypergraph& h, const Budgets& budgets) {
  Graph bip = h.bip();
  std::set<Hypertree> found;
  TreeSearch search(bip, h.vertex_count(), &found, budgets);
  std::vector<int> uf(bip.vertex_count());
  std::iota(uf.begin(), uf.end(), 0);
  search.rec(std::move(uf), 0, 0);
  return std::vector<Hypertree>(found.begin(), found.end());
}

IntPolynomial interior_polynomial_oracle(const Hypergraph& h, const Budgets& budgets) {
  std::vector<Hypertree> trees = hypertrees(h, budgets);
  std::set<Hypertree> lookup(trees.begin(), trees.end());
  const int n = static_cast<int>(h.hyperedges().size());
  std::vector<Int> coeffs;
  for (const Hypertree& f : trees) {
    int inactive = 0;
    for (int j = 1; j < n; ++j) {
      if (f[j] == 0) continue;
      Hypertree probe = f;
      probe[j] -= 1;
      bool moved = false;
      for (int jp = 0; jp < j && !moved; ++jp) {
        probe[jp] += 1;
        if (lookup.count(probe)) moved = true;
        probe[jp] -= 1;
      }
      if (moved) ++inactive;
    }
    if (inactive >= static_cast<int>(coeffs.size())) coeffs.resize(inactive + 1, 0);
    coeffs[inactive] += 1;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial interior_hat_via_matchings(const Graph& g, const Budgets& budgets) {
  if (!bipartition(g)) throw std::invalid_argument("graph is not bipartite");
  MatchingProfile mp = matching_profile(g, budgets);
  std::vector<Int> coeffs;
  for (std::uint64_t c : mp.set_counts) coeffs.emplace_back(c);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial hstar_bg_fast(const Graph& g, const Budgets& budgets) {
  IntPolynomial interior = interior_hat_via_matchings(g, budgets);
  return gamma_substitute(interior, g.vertex_count());
}

namespace {

IntPolynomial x_minus_one_power(int n) {
  std::vector<Int> c(n + 1);
  for (int j = 0; j <= n; ++j) {
    c[j] = binomial(n, j);
    if ((n - j) % 2) c[j] = -c[j];
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial hstar_bg_subgraph_formula(const Graph& g, const Budgets& budgets) {
  const int d = g.vertex_count();
  if (d > 16) {
    throw resource_limit_error("subgraph formula limited to 16 vertices");
  }
  IntPolynomial total;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
    const int j = __builtin_popcount(mask);
    IntPolynomial inner;
    if (mask == 0) {
      inner = IntPolynomial::constant(1);  // single looped apex: a lattice point
    } else {
      std::vector<int> verts;
      std::vector<int> rank(d + 1, 0);
      for (int v = 1; v <= d; ++v) {
        if ((mask >> (v - 1)) & 1) {
          verts.push_back(v);
          rank[v] = static_cast<int>(verts.size());
        }
      }
      std::vector<Edge> es;
      for (const auto& [u, v] : g.edges()) {
        if (rank[u] && rank[v]) es.emplace_back(rank[u], rank[v]);
      }
      Graph induced(j, std::move(es));
      inner = ehrhart_hstar(edge_polytope(tilde(induced), budgets)).hstar;
    }
    total = total + inner * int_pow(2, j) * x_minus_one_power(d - j);
  }
  return total;
}

Hypergraph permute_hyperedges(const Hypergraph& h, const std::vector<int>& perm) {
  const auto& edges = h.hyperedges();
  if (perm.size() != edges.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::vector<int>> reordered;
  for (int idx : perm) {
    if (idx < 0 || idx >= static_cast<int>(edges.size()) || seen[idx]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[idx] = true;
    reordered.push_back(edges[idx]);
  }
  return Hypergraph(h.vertex_count(), std::move(reordered));
}

}  // namespace bgpoly
