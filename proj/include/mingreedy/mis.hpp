#pragma once

#include <string>

#include "mingreedy/graph.hpp"

namespace mingreedy {

enum class MISMethod { simplicial, branch_and_bound };

std::string to_string(MISMethod m);

struct MISResult {
    VertexList set;
    int size = 0;
    MISMethod method = MISMethod::simplicial;
};

inline constexpr int kDefaultBruteforceLimit = 30;

/// Maximum independent set of a chordal graph by simplicial elimination:
/// repeatedly take the smallest-label simplicial vertex and delete its
/// closed neighborhood (a simplicial vertex always lies in some maximum
/// independent set). Throws ClassViolationError on non-chordal input.
MISResult mis_chordal(const Graph& g);

/// Exact maximum independent set for arbitrary graphs: branch and bound on
/// a maximum-degree vertex, bounding by present count minus a greedy
/// matching. Independent of the simplicial route, so the two can
/// cross-check each other. Throws SizeLimitError above `limit` present
/// vertices.
MISResult mis_bruteforce(const Graph& g, int limit = kDefaultBruteforceLimit);

/// Maximum independent set among those containing every vertex of `forced`.
/// Throws InvalidInputError if `forced` is not an independent set.
MISResult max_is_containing(const Graph& g, const VertexList& forced,
                            int limit = kDefaultBruteforceLimit);

} // namespace mingreedy
