#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "mingreedy/errors.hpp"

namespace mingreedy {

using Vertex = int;
using VertexList = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Labeled simple undirected graph with deletion by presence mask.
///
/// Vertex labels are dense integers 0..n-1 and never change. Deletion marks
/// labels absent instead of relabeling, so a set chosen on the original graph
/// can be intersected with the surviving vertices at any later point. All
/// queries see present vertices only; adjacency among absent vertices is
/// retained but invisible.
///
/// Values are immutable after construction apart from operations returning
/// new graphs, so they can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    /// n isolated vertices, all present.
    explicit Graph(int n);

    /// Graph on n vertices with the given undirected edges. Throws
    /// InvalidVertexError on out-of-range endpoints or self-loops.
    /// Duplicate edges are tolerated (sets dedupe them).
    Graph(int n, const std::vector<Edge>& edges);

    int label_count() const { return n_; }
    int present_count() const { return static_cast<int>(present_.count()); }
    bool empty() const { return present_.none(); }
    bool is_present(Vertex v) const { return v >= 0 && v < n_ && present_.test(v); }
    const Bits& present_mask() const { return present_; }

    /// Present neighbors of v as a mask. Throws InvalidVertexError if v is
    /// absent or out of range.
    Bits neighbor_mask(Vertex v) const;

    /// Present neighbors of v, including v itself.
    Bits closed_neighbor_mask(Vertex v) const;

    VertexList neighbors(Vertex v) const;
    VertexList present_vertices() const;

    bool has_edge(Vertex u, Vertex v) const;

    int degree(Vertex v) const;
    int min_degree() const; ///< Throws EmptyGraphError on an empty graph.
    int max_degree() const; ///< Throws EmptyGraphError on an empty graph.

    /// All present vertices of minimum degree. Throws EmptyGraphError if no
    /// vertex is present.
    VertexList min_degree_vertices() const;

    /// Copy of this graph with v and its present neighbors marked absent.
    Graph without_closed_neighborhood(Vertex v) const;

    /// Copy of this graph whose present set is intersected with `mask`.
    Graph restricted_to(const Bits& mask) const;

    /// Copy with a single vertex marked absent.
    Graph without_vertex(Vertex v) const;

    std::vector<VertexList> connected_components() const;
    std::vector<Bits> component_masks() const;
    int component_count() const;

    /// True iff no two members are adjacent. Absent members throw
    /// InvalidVertexError. The empty set is independent.
    bool is_independent_set(const VertexList& s) const;
    bool is_independent_set(const Bits& s) const;

    /// True iff all pairs of members are adjacent. The empty set is a clique.
    bool is_clique(const VertexList& s) const;
    bool is_clique(const Bits& s) const;

    /// True iff N[v] induces a clique among present vertices.
    bool is_simplicial(Vertex v) const;

    /// Present edges as pairs u < v.
    std::vector<Edge> edge_list() const;

    /// Same labels, same present set, same edges among present vertices.
    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::vector<Bits> adj_;
    Bits present_;

    void require_present(Vertex v) const;
};

/// Set-bit iteration: for (int v = first_bit(m); v >= 0; v = next_bit(m, v))
inline int first_bit(const Bits& m) {
    auto p = m.find_first();
    return p == Bits::npos ? -1 : static_cast<int>(p);
}
inline int next_bit(const Bits& m, int v) {
    auto p = m.find_next(static_cast<std::size_t>(v));
    return p == Bits::npos ? -1 : static_cast<int>(p);
}

/// New graph containing the given graphs side by side, labels shifted.
Graph disjoint_union(const std::vector<Graph>& parts);

/// Collect the set bits of a mask as a sorted label list.
VertexList to_vertex_list(const Bits& mask);

/// Mask with the given labels set; size n. Out-of-range labels throw
/// InvalidVertexError.
Bits to_mask(int n, const VertexList& labels);

} // namespace mingreedy
