#pragma once

#include <utility>
#include <vector>

#include "mingreedy/graph.hpp"

namespace mingreedy {

/// Bags plus tree edges (bag-index pairs). For clique trees the bags are
/// exactly the maximal cliques. Disconnected graphs get one tree per
/// component (a forest); a path decomposition of a disconnected interval
/// graph is still a single tree, and validate_tree_decomposition accepts
/// both shapes.
struct TreeDecomposition {
    std::vector<VertexList> bags;
    std::vector<std::pair<int, int>> edges;
};

/// An elimination ordering is a permutation of the present vertex labels.
using EliminationOrdering = VertexList;

/// Lexicographic BFS visit order (partition refinement, smallest label
/// first within a cell). For a chordal graph the reverse of this order is a
/// perfect elimination ordering.
EliminationOrdering lex_bfs(const Graph& g);

/// True iff eliminating vertices in this order always removes a vertex that
/// is simplicial in the not-yet-eliminated part. Throws InvalidOrderingError
/// if `order` is not a permutation of the present vertices.
bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& order);

/// Chordality test: reverse lex-BFS order is a PEO iff the graph is chordal.
bool is_chordal(const Graph& g);

/// All present vertices whose closed neighborhood is a clique.
VertexList simplicial_vertices(const Graph& g);

/// Maximal cliques of a chordal graph, computed from a PEO (the bag of each
/// vertex is itself plus its later neighbors, then non-maximal bags are
/// dropped). Throws ClassViolationError on non-chordal input.
std::vector<VertexList> maximal_cliques(const Graph& g);

/// Clique tree: maximum-weight spanning tree of the clique intersection
/// graph (weight = bag intersection size). Disconnected inputs yield one
/// tree per component. Throws ClassViolationError on non-chordal input.
TreeDecomposition clique_tree(const Graph& g);

/// Checks bag cover, edge cover, and per-vertex subtree connectivity, and
/// that the edges form a single tree or a forest with one tree per graph
/// component.
bool validate_tree_decomposition(const TreeDecomposition& td, const Graph& g);

inline constexpr int kDefaultLeafageBagLimit = 12;

/// Minimum number of leaves over all clique trees of a connected chordal
/// graph, by enumerating the maximum-weight spanning trees of the clique
/// intersection graph. A single-bag graph has leafage 1 by convention (the
/// ratio bound then degenerates to 1, matching greedy optimality on
/// cliques). Throws SizeLimitError when the bag count exceeds `bag_limit`,
/// ClassViolationError on non-chordal input, EmptyGraphError on an empty
/// graph, and InvalidInputError on a disconnected one.
int leafage_small(const Graph& g, int bag_limit = kDefaultLeafageBagLimit);

} // namespace mingreedy
