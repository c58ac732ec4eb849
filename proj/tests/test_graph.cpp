#include <doctest.h>

#include <numeric>

#include "mingreedy/families.hpp"
#include "mingreedy/graph.hpp"
#include "test_util.hpp"

using namespace mingreedy;
using namespace testutil;

TEST_CASE("construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidVertexError);
    CHECK_THROWS_AS(Graph(3, {{-1, 1}}), InvalidVertexError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidVertexError);
}

TEST_CASE("degree") {
    Graph k3 = complete_graph(3);
    for (Vertex v : k3.present_vertices()) CHECK(k3.degree(v) == 2);

    // Grey path midpoints in the tight interval family have degree 2.
    FamilyInstance fig = interval_tight(3);
    for (int i = 0; i < 3; ++i) CHECK(fig.graph.degree(6 * i + 4) == 2);

    CHECK(Graph(1).degree(0) == 0);
    CHECK_THROWS_AS(Graph(1).degree(1), InvalidVertexError);
    Graph deleted = path_graph(3).without_vertex(1);
    CHECK_THROWS_AS(deleted.degree(1), InvalidVertexError);
}

TEST_CASE("min degree vertices") {
    CHECK(path_graph(3).min_degree_vertices() == VertexList{0, 2});
    CHECK(complete_graph(4).min_degree_vertices() == VertexList{0, 1, 2, 3});
    CHECK_THROWS_AS(Graph(0).min_degree_vertices(), EmptyGraphError);

    // Hub and both w_i sit at the minimum degree of the k=2 chordal family;
    // frozen from enumerating degrees of the explicit construction.
    FamilyInstance inst = chordal_tight(2);
    std::vector<int> degs;
    for (Vertex v : inst.graph.present_vertices()) degs.push_back(inst.graph.degree(v));
    CHECK(*std::min_element(degs.begin(), degs.end()) == 2);
    CHECK(inst.graph.min_degree_vertices() == VertexList{0, 2, 6});
}

TEST_CASE("delete closed neighborhood") {
    Graph star = star_graph(3);
    CHECK(star.without_closed_neighborhood(0).empty());

    Graph path = path_graph(3);
    Graph rest = path.without_closed_neighborhood(0);
    CHECK(rest.present_vertices() == VertexList{2});

    FamilyInstance fig = interval_tight(1);
    Graph after = fig.graph.without_closed_neighborhood(4); // grey vertex
    auto comps = after.connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexList{0, 1, 2});
    CHECK(comps[1] == VertexList{6, 7, 8});

    CHECK_THROWS_AS(rest.without_closed_neighborhood(0), InvalidVertexError);
}

TEST_CASE("connected components") {
    CHECK(complete_graph(5).component_count() == 1);
    CHECK(Graph(0).connected_components().empty());

    FamilyInstance inst = chordal_tight(2);
    CHECK(inst.graph.without_closed_neighborhood(0).component_count() == 2);

    SUBCASE("partition, no crossing edges") {
        SplitMix64 rng(11);
        for (int t = 0; t < 40; ++t) {
            Graph g = random_graph(2 + rng.below(12), 25, rng);
            auto masks = g.component_masks();
            Bits all(g.label_count());
            for (const Bits& m : masks) {
                CHECK((all & m).none());
                all |= m;
                for (Vertex v = first_bit(m); v >= 0; v = next_bit(m, v))
                    CHECK(g.neighbor_mask(v).is_subset_of(m));
            }
            CHECK(all == g.present_mask());
        }
    }
}

TEST_CASE("independent sets and cliques") {
    Graph path = path_graph(3);
    CHECK(path.is_independent_set(VertexList{1}));
    CHECK_FALSE(path.is_independent_set(VertexList{0, 1}));
    CHECK(path.is_independent_set(VertexList{}));
    CHECK(path.is_clique(VertexList{}));
    CHECK_FALSE(path.is_clique(VertexList{0, 2}));
    CHECK_THROWS_AS(path.without_vertex(0).is_independent_set(VertexList{0}), InvalidVertexError);

    FamilyInstance lem6 = chordal_tight(3);
    CHECK(lem6.graph.is_independent_set(lem6.optimum_certificate));

    FamilyInstance fig = interval_tight(1);
    CHECK(fig.graph.is_clique(VertexList{0, 1, 2}));

    SUBCASE("both hold exactly for sets of size <= 1") {
        SplitMix64 rng(5);
        for (int t = 0; t < 60; ++t) {
            Graph g = random_graph(2 + rng.below(8), 40, rng);
            VertexList all = g.present_vertices();
            for (std::size_t a = 0; a < all.size(); ++a)
                for (std::size_t b = a; b < all.size(); ++b) {
                    VertexList s = a == b ? VertexList{all[a]} : VertexList{all[a], all[b]};
                    bool both = g.is_independent_set(s) && g.is_clique(s);
                    CHECK(both == (s.size() <= 1));
                }
        }
    }
}

TEST_CASE("max degree") {
    for (int k = 1; k <= 4; ++k) CHECK(interval_tight(k).graph.max_degree() == 3);
    CHECK(permutation_family(3).graph.max_degree() == 4);
    CHECK(Graph(4).max_degree() == 0);
    CHECK_THROWS_AS(Graph(0).max_degree(), EmptyGraphError);
}

TEST_CASE("degree sum is even") {
    SplitMix64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(1 + rng.below(14), 30, rng);
        long long sum = 0;
        for (Vertex v : g.present_vertices()) sum += g.degree(v);
        CHECK(sum % 2 == 0);
    }
}

TEST_CASE("deletion preserves surviving adjacency") {
    SplitMix64 rng(13);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(3 + rng.below(10), 35, rng);
        VertexList present = g.present_vertices();
        Vertex v = present[rng.below(present.size())];
        Graph after = g.without_closed_neighborhood(v);
        for (Vertex a : after.present_vertices())
            for (Vertex b : after.present_vertices()) {
                if (a == b) continue;
                CHECK(after.has_edge(a, b) == g.has_edge(a, b));
            }
    }
}

TEST_CASE("disjoint union and restriction") {
    Graph u = disjoint_union({path_graph(3), complete_graph(3)});
    CHECK(u.label_count() == 6);
    CHECK(u.component_count() == 2);
    CHECK(u.has_edge(3, 5));
    CHECK_FALSE(u.has_edge(2, 3));

    Bits keep(6);
    keep.set(0);
    keep.set(1);
    Graph r = u.restricted_to(keep);
    CHECK(r.present_count() == 2);
    CHECK(r.has_edge(0, 1));
    CHECK(u.present_count() == 6); // original untouched
}
