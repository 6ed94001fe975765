#include "doctest.h"

#include <set>

#include "bgpoly/graph.hpp"
#include "support/testutil.hpp"

using namespace bgpoly;
using namespace testutil;

TEST_CASE("graph construction validates and canonicalizes") {
  Graph g(3, {{2, 1}, {3, 2}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
}

TEST_CASE("edge-list parsing") {
  Graph g = Graph::parse_edge_list("# a comment\n3\n1 2\n# another\n2 3\n");
  CHECK(g == path_graph(3));
  CHECK_THROWS_AS(Graph::parse_edge_list("3\n1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse_edge_list("3\n1 2\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse_edge_list("# only comments\n"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse_edge_list("3\n1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse_edge_list("3\n1 x\n"), std::invalid_argument);
}

TEST_CASE("bipartition basics") {
  auto b = bipartition(Graph(2, {{1, 2}}));
  REQUIRE(b);
  CHECK(b->left == std::vector<int>{1});
  CHECK(b->right == std::vector<int>{2});

  CHECK_FALSE(bipartition(complete_graph(3)));

  auto p = bipartition(path_graph(3));
  REQUIRE(p);
  CHECK(p->left == std::vector<int>{1, 3});
  CHECK(p->right == std::vector<int>{2});
}

TEST_CASE("bipartition is canonical per component") {
  // second component {3,4}: its smallest vertex 3 must land on the left
  Graph g(4, {{1, 2}, {3, 4}});
  auto b = bipartition(g);
  REQUIRE(b);
  CHECK(b->left == std::vector<int>{1, 3});
  CHECK(b->right == std::vector<int>{2, 4});
}

TEST_CASE("components") {
  Graph g(3, {{1, 2}});
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].graph.vertex_count() == 2);
  CHECK(comps[0].original_vertices == std::vector<int>{1, 2});
  CHECK(comps[1].graph.vertex_count() == 1);
  CHECK(comps[1].original_vertices == std::vector<int>{3});

  CHECK(components(path_graph(4)).size() == 1);

  Graph two_tri(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
  auto tc = components(two_tri);
  REQUIRE(tc.size() == 2);
  CHECK(tc[0].graph == complete_graph(3));
  CHECK(tc[1].graph == complete_graph(3));
}

TEST_CASE("chordless cycles: worked instances") {
  auto c6 = chordless_cycles(cycle_graph(6), 3);
  REQUIRE(c6.size() == 1);
  CHECK(c6[0] == std::vector<int>{1, 2, 3, 4, 5, 6});

  // C4 with a chord = two triangles glued along an edge
  Graph glued(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
  CHECK(chordless_cycles(glued, 4).empty());
  CHECK(chordless_cycles(glued, 3).size() == 2);

  auto k4 = chordless_cycles(complete_graph(4), 3);
  CHECK(k4.size() == 4);
}

TEST_CASE("chordless cycles agree with the subset-enumeration oracle") {
  for (const Graph& g : graph_reps_upto(5)) {
    for (int min_len : {3, 4, 6}) {
      auto got = chordless_cycles(g, min_len);
      std::set<std::vector<int>> got_sets;
      for (auto cyc : got) {
        std::sort(cyc.begin(), cyc.end());
        got_sets.insert(cyc);
      }
      CHECK(got_sets == brute_induced_cycle_sets(g, min_len));
      CHECK(got_sets.size() == got.size());  // no duplicates modulo rotation
    }
  }
}

TEST_CASE("chordless cycle budget") {
  Budgets tiny;
  tiny.cycles = 2;
  CHECK_THROWS_AS(chordless_cycles(complete_graph(5), 3, tiny), resource_limit_error);
}

TEST_CASE("odd cycle condition") {
  for (const Graph& g : bipartite_reps_upto(5)) CHECK(satisfies_occ(g));

  // two triangles joined only through a middle vertex: same component, no bridge
  Graph via_path(7, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {3, 7}, {4, 7}});
  CHECK_FALSE(satisfies_occ(via_path));

  Graph bridged(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {3, 4}});
  CHECK(satisfies_occ(bridged));

  // vertex-disjoint odd cycles in different components still need a bridge
  Graph split(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
  CHECK_FALSE(satisfies_occ(split));

  CHECK(satisfies_occ(complete_graph(5)));
}

TEST_CASE("chordal bipartite") {
  CHECK_FALSE(is_chordal_bipartite(cycle_graph(6)));
  CHECK(is_chordal_bipartite(cycle_graph(4)));
  CHECK_FALSE(is_chordal_bipartite(complete_graph(3)));  // not bipartite
  for (const Graph& f : forests_upto(8)) CHECK(is_chordal_bipartite(f));
  CHECK(is_chordal_bipartite(complete_bipartite(3, 3)));
  CHECK_FALSE(is_chordal_bipartite(cycle_graph(8)));
}

TEST_CASE("tilde construction") {
  LoopGraph t1 = tilde(empty_graph(1));
  CHECK(t1.vertex_count == 2);
  CHECK(t1.edges == std::vector<Edge>{{1, 2}});
  CHECK(t1.loops == std::vector<int>{2});

  LoopGraph t2 = tilde(Graph(2, {{1, 2}}));
  CHECK(t2.edges == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(t2.loops == std::vector<int>{3});

  LoopGraph t3 = tilde(path_graph(3));
  CHECK(t3.vertex_count == 4);
  CHECK(t3.edges == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(t3.loops == std::vector<int>{4});
}

TEST_CASE("hat construction") {
  CHECK(hat(Graph(2, {{1, 2}})) == cycle_graph(4));
  CHECK(hat(empty_graph(1)) == path_graph(3));

  Graph h = hat(path_graph(3));
  CHECK(h.vertex_count() == 5);
  CHECK(h.edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}});

  CHECK_THROWS_AS(hat(complete_graph(3)), std::invalid_argument);
  // wrong bipartition rejected
  CHECK_THROWS_AS(hat(Graph(2, {{1, 2}}), Bipartition{{1, 2}, {}}), std::invalid_argument);
}

TEST_CASE("hat output is connected and bipartite") {
  for (const Graph& g : bipartite_reps_upto(5)) {
    Graph h = hat(g);
    CHECK(components(h).size() == 1);
    auto b = bipartition(h);
    REQUIRE(b);
    // sides are V1 + {d+2} and V2 + {d+1}
    auto bg = bipartition(g);
    std::set<int> left(bg->left.begin(), bg->left.end());
    left.insert(g.vertex_count() + 2);
    CHECK(std::set<int>(b->left.begin(), b->left.end()) == left);
  }
}

TEST_CASE("matching profile instances") {
  MatchingProfile c4 = matching_profile(cycle_graph(4));
  CHECK(c4.matching_counts == std::vector<std::uint64_t>{1, 4, 2});
  CHECK(c4.set_counts == std::vector<std::uint64_t>{1, 4, 1});

  MatchingProfile p3 = matching_profile(path_graph(3));
  CHECK(p3.matching_counts == std::vector<std::uint64_t>{1, 2});
  CHECK(p3.set_counts == std::vector<std::uint64_t>{1, 2});

  MatchingProfile e = matching_profile(Graph(2, {{1, 2}}));
  CHECK(e.matching_counts == std::vector<std::uint64_t>{1, 1});
  CHECK(e.set_counts == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("matching profile agrees with edge-subset enumeration") {
  for (const Graph& g : graph_reps_upto(5)) {
    auto [sc, mc] = brute_matching_profile(g);
    MatchingProfile p = matching_profile(g);
    CHECK(p.set_counts == sc);
    CHECK(p.matching_counts == mc);
  }
}

TEST_CASE("set counts never exceed matching counts; forests reach equality") {
  for (const Graph& g : graph_reps_upto(5)) {
    MatchingProfile p = matching_profile(g);
    for (size_t k = 0; k < p.set_counts.size(); ++k) {
      CHECK(p.set_counts[k] <= p.matching_counts[k]);
    }
  }
  for (const Graph& f : forests_upto(8)) {
    MatchingProfile p = matching_profile(f);
    CHECK(p.set_counts == p.matching_counts);
  }
}

TEST_CASE("complement") {
  CHECK(complement(empty_graph(3)) == complete_graph(3));
  CHECK(complement(complete_graph(3)) == empty_graph(3));
  CHECK(complement(path_graph(3)) == Graph(3, {{1, 3}}));
  for (const Graph& g : graph_reps_upto(5)) CHECK(complement(complement(g)) == g);
}

TEST_CASE("bipartition exists iff no chordless odd cycle") {
  for (const Graph& g : graph_reps_upto(5)) {
    bool odd_cycle = false;
    for (const auto& c : chordless_cycles(g, 3)) {
      if (c.size() % 2 == 1) odd_cycle = true;
    }
    CHECK(bool(bipartition(g)) == !odd_cycle);
  }
}

TEST_CASE("bipartite permutation orderings") {
  auto c4 = is_bipartite_permutation(cycle_graph(4));
  REQUIRE(c4);
  CHECK_FALSE(is_bipartite_permutation(cycle_graph(6)));
  CHECK(is_bipartite_permutation(Graph(2, {{1, 2}})));
  CHECK_THROWS_AS(is_bipartite_permutation(complete_graph(3)), std::invalid_argument);

  Budgets tiny;
  tiny.ordering_side_cap = 2;
  CHECK_THROWS_AS(is_bipartite_permutation(complete_bipartite(3, 3), tiny),
                  resource_limit_error);
}

TEST_CASE("bipartite permutation witness satisfies the ordering condition") {
  for (const Graph& g : {complete_bipartite(2, 3), path_graph(5), cycle_graph(4)}) {
    auto w = is_bipartite_permutation(g);
    REQUIRE(w);
    const auto& L = w->left;
    const auto& R = w->right;
    for (size_t a = 0; a < L.size(); ++a) {
      for (size_t b = a + 1; b < L.size(); ++b) {
        for (size_t c = 0; c < R.size(); ++c) {
          for (size_t e = c + 1; e < R.size(); ++e) {
            if (g.has_edge(L[a], R[c]) && g.has_edge(L[b], R[e])) {
              CHECK(g.has_edge(L[a], R[e]));
              CHECK(g.has_edge(L[b], R[c]));
            }
          }
        }
      }
    }
  }
}
