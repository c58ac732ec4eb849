#include <doctest.h>

#include "mingreedy/families.hpp"
#include "mingreedy/ledger.hpp"
#include "mingreedy/mis.hpp"
#include "test_util.hpp"

using namespace mingreedy;
using namespace testutil;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(interval_tight(0), InvalidParameterError);
    CHECK_THROWS_AS(chordal_tight(1), InvalidParameterError);
    CHECK_THROWS_AS(permutation_family(2), InvalidParameterError);
    CHECK_THROWS_AS(two_track_family(2), InvalidParameterError);
    CHECK_THROWS_AS(random_interval(0, 1), InvalidParameterError);
    CHECK_THROWS_AS(random_chordal(0, 1), InvalidParameterError);
}

TEST_CASE("interval tight family") {
    for (int k = 1; k <= 6; ++k) {
        FamilyInstance inst = interval_tight(k);
        CHECK(inst.graph.label_count() == 6 * k + 3);
        CHECK(inst.graph.max_degree() == 3);
        CHECK(is_unit(*inst.representation));
        CHECK(is_chordal(inst.graph));
        CHECK(validate_representation(*inst.representation, inst.graph));
        CHECK(*inst.expected_greedy == 2 * k + 1);
        CHECK(*inst.expected_opt == 3 * k + 1);
        CHECK(inst.graph.is_independent_set(inst.optimum_certificate));
        CHECK(static_cast<int>(inst.optimum_certificate.size()) == 3 * k + 1);
        CHECK(mis_chordal(inst.graph).size == 3 * k + 1);

        GreedyTrace t = greedy_run(inst.graph, TieBreakPolicy::scripted(inst.adversarial_script));
        CHECK(static_cast<int>(t.solution.size()) == 2 * k + 1);

        // Charging is tight here: k 2-moves paid for by k+1 cheap moves.
        MoveLedger l = classify(inst.graph, t, inst.optimum_certificate);
        CHECK(l.moves(2) == k);
        CHECK(l.moves(0) + l.moves(1) == k + 1);
    }
    CHECK(adversarial_value(interval_tight(1).graph).first == 3);
}

TEST_CASE("chordal tight family") {
    for (int k = 2; k <= 6; ++k) {
        FamilyInstance inst = chordal_tight(k);
        CHECK(inst.graph.label_count() == k * (k + 2) + 1);
        CHECK(is_chordal(inst.graph));
        CHECK(*inst.expected_greedy == k + 1);
        CHECK(*inst.expected_opt == 2 * k);
        CHECK(mis_chordal(inst.graph).size == 2 * k);

        GreedyTrace t = greedy_run(inst.graph, TieBreakPolicy::scripted(inst.adversarial_script));
        CHECK(static_cast<int>(t.solution.size()) == k + 1);

        // The scripted first pick is a k-move: arbitrary-j moves are
        // reachable on chordal inputs, unlike interval ones.
        MoveLedger l = classify(inst.graph, t, inst.optimum_certificate);
        CHECK(l.records.front().j == k);

        CHECK(inst.graph.degree(0) == k);
        for (int i = 0; i < k; ++i) {
            CHECK(inst.graph.degree(1 + i * (k + 2)) == k + 1);
            CHECK(inst.graph.degree(2 + i * (k + 2)) == k);
        }
    }
    CHECK(adversarial_value(chordal_tight(2).graph).first == 3);
    CHECK(adversarial_value(chordal_tight(3).graph).first == 4);
}

TEST_CASE("permutation family") {
    for (int k = 3; k <= 6; ++k) {
        FamilyInstance inst = permutation_family(k);
        CHECK(inst.graph.label_count() == 2 * k);
        CHECK(inst.graph.max_degree() == 2 * k - 2);
        CHECK(inst.graph.degree(0) == k);
        for (int label = k; label < 2 * k; ++label) CHECK(inst.graph.degree(label) == k);
        for (int label = 1; label < k; ++label) CHECK(inst.graph.degree(label) == 2 * k - 2);
        CHECK(mis_bruteforce(inst.graph).size == k);
        CHECK(adversarial_value(inst.graph).first == 2);
        CHECK(inst.graph.is_independent_set(inst.optimum_certificate));
    }
    CHECK_FALSE(is_chordal(permutation_family(3).graph));
}

TEST_CASE("two-track family") {
    for (int k = 3; k <= 6; ++k) {
        FamilyInstance inst = two_track_family(k);
        CHECK(inst.graph.label_count() == 2 * k);
        CHECK(inst.graph.max_degree() == 2 * k - 2);
        CHECK(inst.graph.degree(0) == k);
        CHECK(mis_bruteforce(inst.graph).size == k);
        CHECK(adversarial_value(inst.graph).first == 2);

        REQUIRE(inst.track_representations.has_value());
        const auto& [rep1, rep2] = *inst.track_representations;
        // Each track is an interval graph in its own right, and their edge
        // union is the instance graph.
        Graph t1 = graph_from_intervals(rep1);
        Graph t2 = graph_from_intervals(rep2);
        std::vector<Edge> merged = t1.edge_list();
        for (Edge e : t2.edge_list()) merged.push_back(e);
        CHECK(Graph(2 * k, merged) == inst.graph);
        CHECK(validate_representation(rep1, t1));
        CHECK(validate_representation(rep2, t2));
    }
    CHECK_FALSE(is_chordal(two_track_family(3).graph));
}

TEST_CASE("random interval instances") {
    FamilyInstance one = random_interval(1, 5);
    CHECK(one.graph.label_count() == 1);

    SUBCASE("deterministic per seed") {
        FamilyInstance a = random_interval(20, 7);
        FamilyInstance b = random_interval(20, 7);
        CHECK(a.graph == b.graph);
        REQUIRE(a.representation.has_value());
        for (int v = 0; v < 20; ++v) {
            CHECK(a.representation->intervals[v].lo == b.representation->intervals[v].lo);
            CHECK(a.representation->intervals[v].hi == b.representation->intervals[v].hi);
        }
        CHECK(random_interval(20, 8).graph != random_interval(20, 7).graph);
    }

    SUBCASE("always chordal, representation always validates") {
        SplitMix64 rng(163);
        for (int t = 0; t < 30; ++t) {
            FamilyInstance inst = random_interval(1 + rng.below(25), rng.next());
            CHECK(is_chordal(inst.graph));
            CHECK(validate_representation(*inst.representation, inst.graph));
        }
    }
}

TEST_CASE("random chordal instances") {
    CHECK(random_chordal(1, 3).graph.label_count() == 1);

    SplitMix64 rng(167);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(rng.below(16));
        FamilyInstance inst = random_chordal(n, rng.next());
        CHECK(is_chordal(inst.graph));
        CHECK(inst.graph.component_count() == 1);
        // Reverse construction order eliminates each vertex into the clique
        // it was attached to.
        VertexList reversed;
        for (Vertex v = n - 1; v >= 0; --v) reversed.push_back(v);
        CHECK(is_perfect_elimination_ordering(inst.graph, reversed));
    }
    CHECK(random_chordal(12, 42).graph == random_chordal(12, 42).graph);
}

TEST_CASE("random paths and cycles") {
    SplitMix64 rng(173);
    for (int t = 0; t < 30; ++t) {
        FamilyInstance inst = random_paths_cycles(1 + rng.below(20), rng.next());
        CHECK(inst.graph.max_degree() <= 2);
    }
    CHECK(random_paths_cycles(15, 9).graph == random_paths_cycles(15, 9).graph);
}
