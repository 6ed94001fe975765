#include "bgpoly/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace bgpoly {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : d_(vertex_count) {
  if (d_ <= 0) throw std::invalid_argument("vertex count must be positive");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u < 1 || v > d_) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} out of range 1.." +
                                  std::to_string(d_));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge in edge list");
  }
  edges_ = std::move(edges);
  adj_.assign(d_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u - 1].push_back(v);
    adj_[v - 1].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::uint64_t Graph::adjacency_mask(int v) const {
  if (d_ > 64) throw resource_limit_error("adjacency masks limited to 64 vertices");
  std::uint64_t m = 0;
  for (int u : adj_[v - 1]) m |= std::uint64_t{1} << (u - 1);
  return m;
}

namespace {

int parse_int_token(const std::string& tok, const std::string& what) {
  size_t pos = 0;
  int value;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected integer for " + what + ", got '" + tok + "'");
  }
  if (pos != tok.size()) {
    throw std::invalid_argument("trailing characters after " + what + ": '" + tok + "'");
  }
  return value;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph Graph::parse_edge_list(std::istream& in) {
  std::string line;
  int d = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (d < 0) {
      if (toks.size() != 1) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected the vertex count alone");
      }
      d = parse_int_token(toks[0], "vertex count");
      if (d <= 0) throw std::invalid_argument("vertex count must be positive");
    } else {
      if (toks.size() != 2) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected 'u v'");
      }
      int u = parse_int_token(toks[0], "edge endpoint");
      int v = parse_int_token(toks[1], "edge endpoint");
      if (u == v) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": loops are not allowed");
      }
      edges.emplace_back(u, v);
    }
  }
  if (d < 0) throw std::invalid_argument("missing vertex count line");
  return Graph(d, std::move(edges));
}

Graph Graph::parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int d = g.vertex_count();
  std::vector<int> color(d + 1, -1);
  Bipartition b;
  for (int start = 1; start <= d; ++start) {
    if (color[start] != -1) continue;
    // the component's smallest vertex lands on side 0 == left
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 1; v <= d; ++v) {
    (color[v] == 0 ? b.left : b.right).push_back(v);
  }
  return b;
}

std::vector<Component> components(const Graph& g) {
  const int d = g.vertex_count();
  std::vector<int> comp(d + 1, -1);
  int ncomp = 0;
  for (int start = 1; start <= d; ++start) {
    if (comp[start] != -1) continue;
    comp[start] = ncomp;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (comp[v] == -1) {
          comp[v] = ncomp;
          queue.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> verts(ncomp);
  for (int v = 1; v <= d; ++v) verts[comp[v]].push_back(v);
  std::vector<int> newlabel(d + 1, 0);
  for (auto& vs : verts) {
    for (size_t i = 0; i < vs.size(); ++i) newlabel[vs[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Component> out;
  out.reserve(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Edge> es;
    for (const auto& [u, v] : g.edges()) {
      if (comp[u] == c) es.emplace_back(newlabel[u], newlabel[v]);
    }
    out.push_back({Graph(static_cast<int>(verts[c].size()), std::move(es)), verts[c]});
  }
  return out;
}

namespace {

struct CycleSearch {
  const Graph& g;
  std::vector<std::uint64_t> adj;
  std::uint64_t path_mask = 0;
  std::vector<int> path;
  int min_len;
  std::vector<std::vector<int>>* out;
  BudgetMeter meter;

  CycleSearch(const Graph& graph, int min_length, std::vector<std::vector<int>>* sink,
              const Budgets& budgets)
      : g(graph), min_len(min_length), out(sink),
        meter(budgets.cycles, "chordless-cycle") {
    adj.reserve(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) adj.push_back(g.adjacency_mask(v));
  }

  std::uint64_t bit(int v) const { return std::uint64_t{1} << (v - 1); }

  void extend() {
    meter.charge();
    const int start = path.front();
    const int last = path.back();
    for (int w : g.neighbors(last)) {
      if (w <= start || (path_mask & bit(w))) continue;
      std::uint64_t hits = adj[w - 1] & path_mask;
      if (hits == bit(last)) {
        path.push_back(w);
        path_mask |= bit(w);
        extend();
        path_mask &= ~bit(w);
        path.pop_back();
      } else if (hits == (bit(last) | bit(start)) && path.size() >= 2 &&
                 path[1] < w) {
        if (static_cast<int>(path.size()) + 1 >= min_len) {
          std::vector<int> cycle = path;
          cycle.push_back(w);
          out->push_back(std::move(cycle));
        }
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> chordless_cycles(const Graph& g, int min_len,
                                               const Budgets& budgets) {
  if (min_len < 3) throw std::invalid_argument("min_len must be at least 3");
  std::vector<std::vector<int>> out;
  CycleSearch search(g, min_len, &out, budgets);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    for (int u : g.neighbors(v)) {
      if (u <= v) continue;
      search.path = {v, u};
      search.path_mask = search.bit(v) | search.bit(u);
      search.extend();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies_occ(const Graph& g, const Budgets& budgets) {
  auto cycles = chordless_cycles(g, 3, budgets);
  std::vector<std::uint64_t> odd_masks;
  for (const auto& c : cycles) {
    if (c.size() % 2 == 0) continue;
    std::uint64_t m = 0;
    for (int v : c) m |= std::uint64_t{1} << (v - 1);
    odd_masks.push_back(m);
  }
  const int d = g.vertex_count();
  std::vector<std::uint64_t> adj;
  adj.reserve(d);
  for (int v = 1; v <= d; ++v) adj.push_back(g.adjacency_mask(v));
  for (size_t i = 0; i < odd_masks.size(); ++i) {
    for (size_t j = i + 1; j < odd_masks.size(); ++j) {
      if (odd_masks[i] & odd_masks[j]) continue;
      bool bridged = false;
      for (int v = 1; v <= d && !bridged; ++v) {
        if ((odd_masks[i] >> (v - 1)) & 1) bridged = (adj[v - 1] & odd_masks[j]) != 0;
      }
      if (!bridged) return false;
    }
  }
  return true;
}

bool is_chordal_bipartite(const Graph& g, const Budgets& budgets) {
  if (!bipartition(g)) return false;
  return chordless_cycles(g, 6, budgets).empty();
}

LoopGraph tilde(const Graph& g) {
  const int d = g.vertex_count();
  LoopGraph h;
  h.vertex_count = d + 1;
  h.edges = g.edges();
  for (int i = 1; i <= d; ++i) h.edges.emplace_back(i, d + 1);
  std::sort(h.edges.begin(), h.edges.end());
  h.loops = {d + 1};
  return h;
}

namespace {

void check_bipartition(const Graph& g, const Bipartition& b) {
  const int d = g.vertex_count();
  std::vector<int> side(d + 1, -1);
  for (int v : b.left) {
    if (v < 1 || v > d || side[v] != -1) throw std::invalid_argument("invalid bipartition");
    side[v] = 0;
  }
  for (int v : b.right) {
    if (v < 1 || v > d || side[v] != -1) throw std::invalid_argument("invalid bipartition");
    side[v] = 1;
  }
  for (int v = 1; v <= d; ++v) {
    if (side[v] == -1) throw std::invalid_argument("bipartition does not cover vertex " + std::to_string(v));
  }
  for (const auto& [u, v] : g.edges()) {
    if (side[u] == side[v]) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} does not cross the bipartition");
    }
  }
}

}  // namespace

Graph hat(const Graph& g, const Bipartition& b) {
  check_bipartition(g, b);
  const int d = g.vertex_count();
  std::vector<Edge> es = g.edges();
  for (int i : b.left) es.emplace_back(i, d + 1);
  for (int j : b.right) es.emplace_back(j, d + 2);
  es.emplace_back(d + 1, d + 2);
  return Graph(d + 2, std::move(es));
}

Graph hat(const Graph& g) {
  auto b = bipartition(g);
  if (!b) throw std::invalid_argument("graph is not bipartite");
  return hat(g, *b);
}

namespace {

struct MatchingSearch {
  const Graph& g;
  std::vector<std::uint64_t> edge_masks;
  std::vector<std::uint64_t> counts;
  std::vector<std::set<std::uint64_t>> vertex_sets;
  BudgetMeter meter;

  MatchingSearch(const Graph& graph, const Budgets& budgets)
      : g(graph), meter(budgets.matchings, "matching enumeration") {
    const int kmax = g.vertex_count() / 2;
    counts.assign(kmax + 1, 0);
    vertex_sets.resize(kmax + 1);
    for (const auto& [u, v] : g.edges()) {
      edge_masks.push_back((std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (v - 1)));
    }
  }

  void rec(size_t from, std::uint64_t used, int k) {
    meter.charge();
    counts[k] += 1;
    vertex_sets[k].insert(used);
    for (size_t e = from; e < edge_masks.size(); ++e) {
      if (edge_masks[e] & used) continue;
      rec(e + 1, used | edge_masks[e], k + 1);
    }
  }
};

}  // namespace

MatchingProfile matching_profile(const Graph& g, const Budgets& budgets) {
  if (g.vertex_count() > 64) throw resource_limit_error("matching profile limited to 64 vertices");
  MatchingSearch search(g, budgets);
  search.rec(0, 0, 0);
  MatchingProfile p;
  size_t len = search.counts.size();
  while (len > 1 && search.counts[len - 1] == 0) --len;
  for (size_t k = 0; k < len; ++k) {
    p.matching_counts.push_back(search.counts[k]);
    p.set_counts.push_back(search.vertex_sets[k].size());
  }
  return p;
}

Graph complement(const Graph& g) {
  const int d = g.vertex_count();
  std::vector<Edge> es;
  for (int u = 1; u <= d; ++u) {
    for (int v = u + 1; v <= d; ++v) {
      if (!g.has_edge(u, v)) es.emplace_back(u, v);
    }
  }
  return Graph(d, std::move(es));
}

namespace {

// Checks the strong-ordering implication for the orderings sigma_l, sigma_r:
// for l-indices a < b and r-indices c < e with {L[a],R[e]}, {L[b],R[c]} demands
// both crossings... stated directly below on edge pairs.
struct OrderingSearch {
  const Graph& g;
  std::vector<int> left, right;   // current orderings being built
  std::vector<int> lpool, rpool;  // fixed side contents

  explicit OrderingSearch(const Graph& graph) : g(graph) {}

  bool pair_ok(int i, int ip, int j, int jp) const {
    // i <1 ip and j <2 jp given; implication from the definition
    if (g.has_edge(i, j) && g.has_edge(ip, jp)) {
      return g.has_edge(i, jp) && g.has_edge(ip, j);
    }
    return true;
  }

  // Incremental check after appending jp to `right`: all quadruples whose
  // latest element is jp.
  bool new_right_ok() const {
    int jp = right.back();
    for (size_t c = 0; c + 1 < right.size(); ++c) {
      int j = right[c];
      for (size_t a = 0; a < left.size(); ++a) {
        for (size_t b = a + 1; b < left.size(); ++b) {
          if (!pair_ok(left[a], left[b], j, jp)) return false;
        }
      }
    }
    return true;
  }

  bool build_right(std::uint64_t used) {
    if (right.size() == rpool.size()) return true;
    for (size_t t = 0; t < rpool.size(); ++t) {
      if ((used >> t) & 1) continue;
      right.push_back(rpool[t]);
      if (new_right_ok() && build_right(used | (std::uint64_t{1} << t))) return true;
      right.pop_back();
    }
    return false;
  }

  std::optional<VertexOrders> run() {
    std::sort(lpool.begin(), lpool.end());
    std::vector<int> perm = lpool;
    do {
      left = perm;
      right.clear();
      if (build_right(0)) return VertexOrders{left, right};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }
};

}  // namespace

std::optional<VertexOrders> is_bipartite_permutation(const Graph& g,
                                                     const Budgets& budgets) {
  auto b = bipartition(g);
  if (!b) throw std::invalid_argument("graph is not bipartite");
  const size_t cap = static_cast<size_t>(budgets.ordering_side_cap);
  if (b->left.size() > cap || b->right.size() > cap) {
    throw resource_limit_error("bipartite-permutation search limited to sides of " +
                               std::to_string(cap));
  }
  OrderingSearch search(g);
  search.lpool = b->left;
  search.rpool = b->right;
  return search.run();
}

}  // namespace bgpoly
