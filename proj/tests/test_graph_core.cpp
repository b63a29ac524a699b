#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "wmp/graph.hpp"

using namespace wmp;

namespace {

Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    return Graph(g.size(), es);
}

}  // namespace

TEST_CASE("vertex sets") {
    VertexSet s = VertexSet::of({0, 3, 63});
    CHECK(s.count() == 3);
    CHECK(s.contains(3));
    CHECK(!s.contains(1));
    CHECK(s.members() == std::vector<int>{0, 3, 63});
    CHECK(VertexSet().empty());
}

TEST_CASE("graph construction") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(p3.size() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 0));
    CHECK(!p3.adjacent(0, 2));
    CHECK(p3.degree(1) == 2);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(p3 == path_graph(3));

    // duplicates collapse
    CHECK(Graph(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);

    CHECK_THROWS_AS(Graph(0), SizeOutOfRange);
    CHECK_THROWS_AS(Graph(65), SizeOutOfRange);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidEdge);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidEdge);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), InvalidEdge);

    CHECK_NOTHROW(Graph(64));  // the upper bound itself is fine
    CHECK(complete_graph(64).edge_count() == 64 * 63 / 2);
}

TEST_CASE("from_rows validates") {
    CHECK_THROWS_AS(Graph::from_rows({1, 0}), InvalidEdge);   // asymmetric
    CHECK_THROWS_AS(Graph::from_rows({1, 2}), InvalidEdge);   // loop
    CHECK_THROWS_AS(Graph::from_rows({4, 0}), InvalidEdge);   // stray bit
    CHECK(Graph::from_rows({2, 1}) == complete_graph(2));
}

TEST_CASE("named families") {
    CHECK(empty_graph(4).edge_count() == 0);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle_graph(2), SizeOutOfRange);
    CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
    CHECK(complete_bipartite_graph(1, 3).degree(0) == 3);
    CHECK_THROWS_AS(complete_bipartite_graph(0, 3), SizeOutOfRange);
    CHECK(paw_graph().edge_count() == 4);
    CHECK(diamond_graph().edge_count() == 5);
    CHECK(cricket_graph().edge_count() == 5);
    CHECK(dart_graph().edge_count() == 6);
    CHECK(hourglass_graph().edge_count() == 6);
}

TEST_CASE("complement") {
    CHECK(complement(empty_graph(4)) == complete_graph(4));
    CHECK(complement(complete_graph(1)) == Graph(1));
    // C5 is self-complementary
    CHECK(are_isomorphic_bruteforce(complement(cycle_graph(5)), cycle_graph(5))
              .has_value());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(1 + trial % 9, rng);
        CHECK(complement(complement(g)) == g);  // involution, labeled
        CHECK(g.edge_count() + complement(g).edge_count() ==
              g.size() * (g.size() - 1) / 2);
    }
}

TEST_CASE("disjoint union") {
    Graph u = disjoint_union(complete_graph(2), Graph(1));
    CHECK(u.size() == 3);
    CHECK(u.edges() == std::vector<std::pair<int, int>>{{0, 1}});
    Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(two_k3.edge_count() == 6);
    CHECK(!two_k3.adjacent(2, 3));
    CHECK_THROWS_AS(disjoint_union(complete_graph(40), complete_graph(30)),
                    SizeOutOfRange);
}

TEST_CASE("induced subgraph") {
    // P4 restricted to {0,1,3} keeps only the 0-1 edge
    Graph sub = induced_subgraph(path_graph(4), VertexSet::of({0, 1, 3}));
    CHECK(sub.size() == 3);
    CHECK(sub.edges() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(induced_subgraph(cycle_graph(5), VertexSet::of({0, 1, 2, 3, 4})) ==
          cycle_graph(5));
    CHECK_THROWS_AS(induced_subgraph(path_graph(4), VertexSet()),
                    EmptySelection);
    CHECK_THROWS_AS(induced_subgraph(path_graph(4), VertexSet::of({1, 5})),
                    SizeOutOfRange);
}

TEST_CASE("connected components") {
    Graph g(5, {{0, 1}, {2, 3}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet::of({0, 1}));
    CHECK(comps[1] == VertexSet::of({2, 3}));
    CHECK(comps[2] == VertexSet::of({4}));
    CHECK(is_connected(cycle_graph(6)));
    CHECK(!is_connected(g));
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("bipartition") {
    auto parts = bipartition(path_graph(4));
    REQUIRE(parts.has_value());
    CHECK(parts->first == VertexSet::of({0, 2}));
    CHECK(parts->second == VertexSet::of({1, 3}));
    CHECK(!bipartition(cycle_graph(5)).has_value());
    CHECK(bipartition(cycle_graph(6)).has_value());
    CHECK(is_bipartite(empty_graph(3)));
    CHECK(!is_bipartite(complete_graph(3)));
    // every component's smallest vertex lands on the first side
    auto two = bipartition(Graph(4, {{0, 1}, {2, 3}}));
    REQUIRE(two.has_value());
    CHECK(two->first == VertexSet::of({0, 2}));
}

TEST_CASE("line graph") {
    LineGraph lp4 = line_graph(path_graph(4));
    CHECK(lp4.graph == path_graph(3));
    CHECK(lp4.edge_of_vertex ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(are_isomorphic_bruteforce(line_graph(complete_graph(3)).graph,
                                    complete_graph(3))
              .has_value());
    // L(K1,3) is a triangle
    CHECK(are_isomorphic_bruteforce(
              line_graph(complete_bipartite_graph(1, 3)).graph,
              complete_graph(3))
              .has_value());
    CHECK_THROWS_AS(line_graph(empty_graph(3)), EmptySelection);
    CHECK_THROWS_AS(line_graph(complete_graph(13)), SizeOutOfRange);
}

TEST_CASE("brute-force isomorphism") {
    CHECK(!are_isomorphic_bruteforce(complete_graph(3), path_graph(3))
               .has_value());
    CHECK(!are_isomorphic_bruteforce(Graph(2), Graph(3)).has_value());
    CHECK_THROWS_AS(are_isomorphic_bruteforce(Graph(9), Graph(9)),
                    SizeOutOfRange);

    // a relabeled P4 maps back correctly
    std::vector<int> perm{2, 0, 3, 1};
    Graph shuffled = relabeled(path_graph(4), perm);
    auto found = are_isomorphic_bruteforce(path_graph(4), shuffled);
    REQUIRE(found.has_value());
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            CHECK(path_graph(4).adjacent(u, v) ==
                  shuffled.adjacent((*found)[u], (*found)[v]));

    // deterministic: identical inputs give the identity first
    auto self = are_isomorphic_bruteforce(paw_graph(), paw_graph());
    REQUIRE(self.has_value());
    CHECK(*self == std::vector<int>{0, 1, 2, 3});

    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 7;
        Graph g = random_graph(n, rng);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(are_isomorphic_bruteforce(g, relabeled(g, p)).has_value());
        // flipping one pair u<v usually breaks it; verify the negative too
        Graph h = complement(g);
        if (g.edge_count() != h.edge_count())
            CHECK(!are_isomorphic_bruteforce(g, h).has_value());
    }
}
