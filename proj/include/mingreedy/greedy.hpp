#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mingreedy/graph.hpp"

namespace mingreedy {

/// How the minimum-degree greedy breaks ties between minimum-degree
/// vertices.
///
/// - first_label: smallest label.
/// - scripted: the tied vertex ranked earliest in a fixed preference list
///   covering every label. This is how the instance families replay their
///   worst-case executions at any size.
/// - seeded_random: uniform choice among the tied vertices driven by
///   SplitMix64 (see rng.hpp), so runs reproduce across platforms.
/// - simplicial_first: smallest-label simplicial vertex among the tied
///   ones, falling back to first_label when none is simplicial.
/// - adversarial_exhaustive / benevolent_exhaustive: search all complete
///   executions for the global minimum / maximum solution size.
struct TieBreakPolicy {
    enum class Kind {
        first_label,
        scripted,
        seeded_random,
        simplicial_first,
        adversarial_exhaustive,
        benevolent_exhaustive,
    };
    Kind kind = Kind::first_label;
    VertexList preference;   // scripted only
    std::uint64_t seed = 0;  // seeded_random only

    std::string name() const;

    static TieBreakPolicy first_label() { return {Kind::first_label, {}, 0}; }
    static TieBreakPolicy scripted(VertexList pref) {
        return {Kind::scripted, std::move(pref), 0};
    }
    static TieBreakPolicy seeded_random(std::uint64_t seed) {
        return {Kind::seeded_random, {}, seed};
    }
    static TieBreakPolicy simplicial_first() { return {Kind::simplicial_first, {}, 0}; }
    static TieBreakPolicy adversarial() { return {Kind::adversarial_exhaustive, {}, 0}; }
    static TieBreakPolicy benevolent() { return {Kind::benevolent_exhaustive, {}, 0}; }
};

struct GreedyPick {
    Vertex vertex = -1;
    int degree = 0;          ///< degree of the pick in the remaining graph
    int tie_set_size = 0;    ///< how many minimum-degree vertices were tied
    int components_before = 0;
    int components_after = 0;
};

/// A complete greedy execution: every pick had minimum degree at its step
/// and the picks exhaust the graph.
struct GreedyTrace {
    std::vector<GreedyPick> picks;
    VertexList solution;
};

inline constexpr int kDefaultExhaustiveLimit = 26;

/// One complete execution of minimum-degree greedy under the given
/// tie-breaking policy. Exhaustive policies throw SizeLimitError above
/// `exhaustive_limit` present vertices; scripted policies throw
/// InvalidInputError when the preference list is not a permutation of all
/// labels.
GreedyTrace greedy_run(const Graph& g, const TieBreakPolicy& policy,
                       int exhaustive_limit = kDefaultExhaustiveLimit);

/// Minimum solution size over all complete greedy executions, with a
/// witness trace. Depth-first search over minimum-degree choices, memoized
/// on the present-vertex set and run independently per connected component
/// (greedy executions on different components never interact).
std::pair<int, GreedyTrace> adversarial_value(const Graph& g,
                                              int exhaustive_limit = kDefaultExhaustiveLimit);

/// Maximum solution size over all complete greedy executions ("greedy with
/// perfect advice"), with a witness trace.
std::pair<int, GreedyTrace> benevolent_value(const Graph& g,
                                             int exhaustive_limit = kDefaultExhaustiveLimit);

/// Replays the trace and confirms the minimum-degree condition at every
/// step, the recorded step context, and the final solution.
bool validate_trace(const Graph& g, const GreedyTrace& t);

} // namespace mingreedy
