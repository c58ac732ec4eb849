#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "mingreedy/io.hpp"
#include "test_util.hpp"

using namespace mingreedy;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("mingreedy-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("edge list round trip") {
    SplitMix64 rng(179);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(1 + rng.below(15), 40, rng);
        std::stringstream ss;
        write_edge_list(ss, g);
        CHECK(read_edge_list(ss) == g);
    }
}

TEST_CASE("edge list accepts comments and blank lines") {
    std::stringstream ss("# a triangle plus an isolated vertex\n4 3\n\n0 1   # first\n0 2\n1 2\n");
    Graph g = read_edge_list(ss);
    CHECK(g.label_count() == 4);
    CHECK(g.degree(3) == 0);
    CHECK(g.is_clique(VertexList{0, 1, 2}));
}

TEST_CASE("edge list rejects malformed input") {
    std::stringstream no_header("0 1\n"); // parses as a header declaring one edge
    CHECK_THROWS_AS(read_edge_list(no_header), InvalidInputError);
    std::stringstream empty("");
    CHECK_THROWS_AS(read_edge_list(empty), InvalidInputError);
    std::stringstream unordered("3 1\n2 1\n");
    CHECK_THROWS_AS(read_edge_list(unordered), InvalidInputError);
    std::stringstream self_loop("3 1\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(self_loop), InvalidInputError);
    std::stringstream miscount("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(miscount), InvalidInputError);
    std::stringstream junk("3 1\nzero one\n");
    CHECK_THROWS_AS(read_edge_list(junk), InvalidInputError);
}

TEST_CASE("interval json round trip keeps exact endpoints") {
    IntervalRepresentation rep;
    rep.intervals.push_back({Rational(1, 3), Rational(7, 3)});
    rep.intervals.push_back({Rational(-5, 2), Rational(0)});
    json j = intervals_to_json(rep);
    IntervalRepresentation back = intervals_from_json(j);
    REQUIRE(back.size() == 2);
    CHECK(back.intervals[0].lo == Rational(1, 3));
    CHECK(back.intervals[0].hi == Rational(7, 3));
    CHECK(back.intervals[1].lo == Rational(-5, 2));
    CHECK(back.intervals[1].hi == Rational(0));
}

TEST_CASE("trace and decomposition json round trips") {
    FamilyInstance fig = interval_tight(2);
    GreedyTrace t = greedy_run(fig.graph, TieBreakPolicy::scripted(fig.adversarial_script));
    GreedyTrace back = trace_from_json(trace_to_json(t));
    CHECK(back.solution == t.solution);
    REQUIRE(back.picks.size() == t.picks.size());
    CHECK(validate_trace(fig.graph, back));

    TreeDecomposition td = clique_path(*fig.representation);
    TreeDecomposition td_back = tree_decomposition_from_json(tree_decomposition_to_json(td));
    CHECK(td_back.bags == td.bags);
    CHECK(td_back.edges == td.edges);
}

TEST_CASE("instance directory round trip") {
    TempDir tmp;
    for (const FamilyInstance& inst :
         {interval_tight(2), chordal_tight(3), permutation_family(4), two_track_family(3),
          random_interval(9, 31), random_chordal(8, 17)}) {
        fs::path dir = tmp.path / inst.family;
        write_instance_dir(dir, inst);
        FamilyInstance back = read_instance_dir(dir);
        CHECK(back.graph == inst.graph);
        CHECK(back.family == inst.family);
        CHECK(back.parameter == inst.parameter);
        CHECK(back.adversarial_script == inst.adversarial_script);
        CHECK(back.optimum_certificate == inst.optimum_certificate);
        CHECK(back.expected_greedy == inst.expected_greedy);
        CHECK(back.expected_opt == inst.expected_opt);
        CHECK(back.representation.has_value() == inst.representation.has_value());
        if (inst.representation)
            CHECK(validate_representation(*back.representation, back.graph));
        CHECK(back.track_representations.has_value() == inst.track_representations.has_value());
        if (inst.track_representations) {
            CHECK(graph_from_intervals(back.track_representations->first) ==
                  graph_from_intervals(inst.track_representations->first));
            CHECK(graph_from_intervals(back.track_representations->second) ==
                  graph_from_intervals(inst.track_representations->second));
        }
    }
}

TEST_CASE("serialization is byte-stable") {
    TempDir tmp;
    FamilyInstance inst = random_interval(20, 7);
    write_instance_dir(tmp.path / "a", inst);
    write_instance_dir(tmp.path / "b", random_interval(20, 7));
    for (const char* name : {"edges.txt", "meta.json", "intervals.json"})
        CHECK(slurp(tmp.path / "a" / name) == slurp(tmp.path / "b" / name));
}
