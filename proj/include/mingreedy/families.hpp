#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "mingreedy/graph.hpp"
#include "mingreedy/interval.hpp"

namespace mingreedy {

/// A generated instance together with its ground truth. The named families
/// ship the worst-case tie-breaking script, an optimal certificate, and the
/// closed-form greedy/optimum sizes; their constructors re-verify all of
/// that on every call, so an instance in hand is already self-checked.
/// Random instances carry only the graph (plus a representation when they
/// are built from intervals).
struct FamilyInstance {
    Graph graph;
    std::optional<IntervalRepresentation> representation;
    std::optional<std::pair<IntervalRepresentation, IntervalRepresentation>> track_representations;
    VertexList adversarial_script; ///< full tie-break preference; empty for random instances
    VertexList optimum_certificate;
    std::optional<int> expected_greedy;
    std::optional<int> expected_opt;
    std::string family;
    long long parameter = 0; ///< k for the named families, n for random ones
    std::optional<std::uint64_t> seed;
};

/// Unit-interval family of maximum degree 3 on 6k+3 vertices: k+1 triangles
/// alternating with k three-vertex paths. Scripting greedy onto the k path
/// midpoints ("grey" vertices) forces a solution of size 2k+1 while the
/// optimum is 3k+1, so the ratio tends to 2/3. Labels follow left-to-right
/// interval order.
FamilyInstance interval_tight(int k);

/// Chordal family on k(k+2)+1 vertices: k cliques of size k+2, each with one
/// edge {v_i, w_i} removed, plus a hub adjacent to every v_i. Scripting the
/// hub first forces k+1 picks against an optimum of 2k, so the ratio tends
/// to 1/2.
FamilyInstance chordal_tight(int k);

/// Permutation graph on 2k vertices where greedy can be forced down to 2
/// picks against an optimum of k. Not chordal.
FamilyInstance permutation_family(int k);

/// Union of two interval graphs on 2k shared vertices with the same 2-vs-k
/// gap; ships one explicit interval representation per track.
FamilyInstance two_track_family(int k);

/// n random closed intervals with integer endpoints drawn uniformly from
/// [0, 4n].
FamilyInstance random_interval(int n, std::uint64_t seed);

/// Random connected chordal graph: each new vertex attaches to a random
/// clique of the existing graph, so reverse insertion order is a perfect
/// elimination ordering.
FamilyInstance random_chordal(int n, std::uint64_t seed);

/// Random disjoint union of isolated vertices, paths, and cycles (max
/// degree 2).
FamilyInstance random_paths_cycles(int n, std::uint64_t seed);

} // namespace mingreedy
