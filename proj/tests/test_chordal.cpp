#include <doctest.h>

#include <algorithm>

#include "mingreedy/chordal.hpp"
#include "mingreedy/families.hpp"
#include "mingreedy/interval.hpp"
#include "test_util.hpp"

using namespace mingreedy;
using namespace testutil;

TEST_CASE("lex bfs") {
    CHECK(lex_bfs(Graph(1)) == VertexList{0});
    CHECK(lex_bfs(Graph(0)).empty());

    // Every ordering of a clique is a PEO, so reversing any lex-BFS order
    // must pass.
    Graph k3 = complete_graph(3);
    EliminationOrdering order = lex_bfs(k3);
    std::reverse(order.begin(), order.end());
    CHECK(is_perfect_elimination_ordering(k3, order));

    SplitMix64 rng(3);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_chordal(10, rng.next()).graph;
        EliminationOrdering o = lex_bfs(g);
        CHECK(o.size() == 10);
        std::reverse(o.begin(), o.end());
        CHECK(is_perfect_elimination_ordering(g, o));
        CHECK(peo_simulation_oracle(g, o));
    }
}

TEST_CASE("perfect elimination ordering") {
    Graph path = path_graph(3);
    CHECK(is_perfect_elimination_ordering(path, {0, 2, 1}));

    Graph c4 = cycle_graph(4);
    VertexList perm = {0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        CHECK_FALSE(is_perfect_elimination_ordering(c4, perm));
        CHECK_FALSE(peo_simulation_oracle(c4, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK_THROWS_AS(is_perfect_elimination_ordering(path, {0, 1}), InvalidOrderingError);
    CHECK_THROWS_AS(is_perfect_elimination_ordering(path, {0, 1, 1}), InvalidOrderingError);

    SUBCASE("matches the elimination simulation") {
        // Specific orders on the k=2 chordal-tight graph (labels: hub 0;
        // cliques {1..4} and {5..8} with v_i, w_i first in each).
        Graph g = chordal_tight(2).graph;
        VertexList w_first = {2, 6, 1, 5, 0, 3, 4, 7, 8}; // w's, v's, hub, rest
        CHECK(is_perfect_elimination_ordering(g, w_first) == peo_simulation_oracle(g, w_first));
        VertexList valid = {2, 6, 3, 4, 7, 8, 1, 5, 0}; // w's, fillers, v's, hub
        CHECK(peo_simulation_oracle(g, valid));
        CHECK(is_perfect_elimination_ordering(g, valid));

        SplitMix64 rng(17);
        for (int t = 0; t < 60; ++t) {
            Graph r = random_graph(2 + rng.below(7), 45, rng);
            VertexList order = r.present_vertices();
            for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
                std::swap(order[i], order[rng.below(i + 1)]);
            CHECK(is_perfect_elimination_ordering(r, order) == peo_simulation_oracle(r, order));
        }
    }
}

TEST_CASE("chordality") {
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK(is_chordal(Graph(0)));
    CHECK(is_chordal(chordal_tight(3).graph));

    SplitMix64 rng(23);
    for (int t = 0; t < 25; ++t)
        CHECK(is_chordal(random_interval(1 + rng.below(12), rng.next()).graph));

    SUBCASE("agrees with the induced-cycle definition on every 5-vertex graph") {
        for (std::uint32_t bits = 0; bits < (1u << 10); ++bits) {
            std::vector<Edge> edges;
            int idx = 0;
            for (int u = 0; u < 5; ++u)
                for (int v = u + 1; v < 5; ++v, ++idx)
                    if (bits >> idx & 1) edges.emplace_back(u, v);
            Graph g(5, edges);
            CHECK(is_chordal(g) == chordal_definition_oracle(g));
        }
    }

    SUBCASE("agrees with the definition on random graphs up to n=8") {
        SplitMix64 rng2(29);
        for (int t = 0; t < 120; ++t) {
            Graph g = random_graph(4 + rng2.below(5), 20 + rng2.below(60), rng2);
            CHECK(is_chordal(g) == chordal_definition_oracle(g));
        }
    }
}

TEST_CASE("simplicial vertices") {
    Graph star = star_graph(3);
    VertexList s = simplicial_vertices(star);
    CHECK(std::find(s.begin(), s.end(), 0) == s.end());
    CHECK(s == VertexList{1, 2, 3});

    // Degree <= 1 vertices are always simplicial.
    SplitMix64 rng(31);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(2 + rng.below(9), 30, rng);
        VertexList simp = simplicial_vertices(g);
        for (Vertex v : g.present_vertices())
            if (g.degree(v) <= 1) CHECK(std::find(simp.begin(), simp.end(), v) != simp.end());
    }

    // In the k=1 interval family exactly the triangle vertices away from
    // the path are simplicial.
    CHECK(simplicial_vertices(interval_tight(1).graph) == VertexList{0, 1, 7, 8});
}

TEST_CASE("maximal cliques") {
    CHECK(maximal_cliques(complete_graph(4)) == std::vector<VertexList>{{0, 1, 2, 3}});

    auto path_cliques = maximal_cliques(path_graph(3));
    std::sort(path_cliques.begin(), path_cliques.end());
    CHECK(path_cliques == std::vector<VertexList>{{0, 1}, {1, 2}});

    auto fig_cliques = maximal_cliques(interval_tight(1).graph);
    CHECK(fig_cliques.size() == 6);
    std::sort(fig_cliques.begin(), fig_cliques.end());
    CHECK(fig_cliques ==
          std::vector<VertexList>{{0, 1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7, 8}});

    CHECK_THROWS_AS(maximal_cliques(cycle_graph(5)), ClassViolationError);

    SplitMix64 rng(37);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_chordal(2 + rng.below(9), rng.next()).graph;
        auto got = maximal_cliques(g);
        std::sort(got.begin(), got.end());
        CHECK(got == maximal_cliques_oracle(g));
    }
}

TEST_CASE("clique tree") {
    TreeDecomposition td = clique_tree(path_graph(3));
    CHECK(td.bags.size() == 2);
    CHECK(td.edges.size() == 1);
    CHECK(validate_tree_decomposition(td, path_graph(3)));

    CHECK_THROWS_AS(clique_tree(cycle_graph(4)), ClassViolationError);

    SUBCASE("valid on random chordal graphs, including forests") {
        SplitMix64 rng(41);
        for (int t = 0; t < 40; ++t) {
            Graph g = random_chordal(1 + rng.below(12), rng.next()).graph;
            if (t % 3 == 0)
                g = disjoint_union({g, random_chordal(1 + rng.below(5), rng.next()).graph});
            TreeDecomposition ct = clique_tree(g);
            CHECK(validate_tree_decomposition(ct, g));
            for (std::size_t i = 0; i < ct.bags.size(); ++i)
                for (std::size_t j = 0; j < ct.bags.size(); ++j) {
                    if (i == j) continue;
                    CHECK_FALSE(std::includes(ct.bags[j].begin(), ct.bags[j].end(),
                                              ct.bags[i].begin(), ct.bags[i].end()));
                }
        }
    }

    SUBCASE("closed neighborhoods equal bag unions") {
        SplitMix64 rng(43);
        for (int t = 0; t < 30; ++t) {
            Graph g = random_chordal(2 + rng.below(10), rng.next()).graph;
            TreeDecomposition ct = clique_tree(g);
            for (Vertex v : g.present_vertices()) {
                Bits bag_union(g.label_count());
                for (const VertexList& bag : ct.bags)
                    if (std::find(bag.begin(), bag.end(), v) != bag.end())
                        for (Vertex u : bag) bag_union.set(u);
                CHECK(bag_union == g.closed_neighbor_mask(v));
            }
        }
    }
}

TEST_CASE("validate tree decomposition rejects broken inputs") {
    Graph g = path_graph(4);
    TreeDecomposition td = clique_tree(g);
    REQUIRE(validate_tree_decomposition(td, g));

    TreeDecomposition missing = td;
    missing.bags.pop_back();
    missing.edges.clear();
    for (int i = 0; i + 1 < static_cast<int>(missing.bags.size()); ++i)
        missing.edges.emplace_back(i, i + 1);
    CHECK_FALSE(validate_tree_decomposition(missing, g));

    // Same bags, but a tree that separates the two bags holding vertex 1.
    TreeDecomposition bad;
    bad.bags = {{0, 1}, {1, 2}, {2, 3}};
    bad.edges = {{0, 2}, {2, 1}};
    CHECK_FALSE(validate_tree_decomposition(bad, g));

    TreeDecomposition cyclic;
    cyclic.bags = {{0, 1}, {1, 2}, {2, 3}};
    cyclic.edges = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_FALSE(validate_tree_decomposition(cyclic, g));
}

TEST_CASE("leafage") {
    CHECK(leafage_small(path_graph(3)) == 2);
    CHECK(leafage_small(complete_graph(5)) == 1);
    CHECK(leafage_small(Graph(1)) == 1);

    SUBCASE("spider with three legs has leafage 3") {
        // Three 2-edge paths glued at a central vertex.
        Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
        CHECK(leafage_small(spider) == 3);
        CHECK(leafage_tree_enumeration_oracle(spider) == 3);
    }

    SUBCASE("interval graphs have leafage at most 2") {
        for (int k = 1; k <= 3; ++k)
            CHECK(leafage_small(interval_tight(k).graph, 6 * k + 3) <= 2);
    }

    SUBCASE("matches the labeled-tree enumeration oracle") {
        SplitMix64 rng(47);
        int compared = 0;
        for (int t = 0; t < 60 && compared < 25; ++t) {
            Graph g = random_chordal(2 + rng.below(6), rng.next()).graph;
            if (maximal_cliques(g).size() > 7) continue;
            ++compared;
            CHECK(leafage_small(g) == leafage_tree_enumeration_oracle(g));
        }
        CHECK(compared >= 20);
    }

    SUBCASE("non-increasing under vertex deletion") {
        SplitMix64 rng(53);
        for (int t = 0; t < 25; ++t) {
            Graph g = random_chordal(3 + rng.below(8), rng.next()).graph;
            int base = leafage_small(g);
            for (Vertex v : g.present_vertices()) {
                Graph h = g.without_vertex(v);
                if (h.empty() || h.component_count() != 1) continue;
                CHECK(leafage_small(h) <= base);
            }
        }
    }

    CHECK_THROWS_AS(leafage_small(cycle_graph(4)), ClassViolationError);
    CHECK_THROWS_AS(leafage_small(Graph(2)), InvalidInputError);   // disconnected
    CHECK_THROWS_AS(leafage_small(Graph(0)), EmptyGraphError);
    CHECK_THROWS_AS(leafage_small(star_graph(13)), SizeLimitError); // 13 bags > limit
}
