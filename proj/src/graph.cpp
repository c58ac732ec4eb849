#include "mingreedy/graph.hpp"

#include <algorithm>
#include <string>

namespace mingreedy {

namespace {

std::string label_str(Vertex v) { return "vertex " + std::to_string(v); }

} // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), Bits(n)), present_(n) {
    if (n < 0) throw InvalidVertexError("negative vertex count");
    present_.set();
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw InvalidVertexError("edge endpoint out of range: " + label_str(u) + ", " +
                                     label_str(v));
        if (u == v) throw InvalidVertexError("self-loop at " + label_str(u));
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

void Graph::require_present(Vertex v) const {
    if (v < 0 || v >= n_) throw InvalidVertexError(label_str(v) + " out of range");
    if (!present_.test(v)) throw InvalidVertexError(label_str(v) + " is absent");
}

Bits Graph::neighbor_mask(Vertex v) const {
    require_present(v);
    return adj_[v] & present_;
}

Bits Graph::closed_neighbor_mask(Vertex v) const {
    Bits m = neighbor_mask(v);
    m.set(v);
    return m;
}

VertexList Graph::neighbors(Vertex v) const { return to_vertex_list(neighbor_mask(v)); }

VertexList Graph::present_vertices() const { return to_vertex_list(present_); }

bool Graph::has_edge(Vertex u, Vertex v) const {
    require_present(u);
    require_present(v);
    return adj_[u].test(v);
}

int Graph::degree(Vertex v) const {
    require_present(v);
    return static_cast<int>((adj_[v] & present_).count());
}

int Graph::min_degree() const {
    if (empty()) throw EmptyGraphError("minimum degree of an empty graph");
    int best = n_;
    for (Vertex v = first_bit(present_); v >= 0; v = next_bit(present_, v))
        best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    if (empty()) throw EmptyGraphError("maximum degree of an empty graph");
    int best = 0;
    for (Vertex v = first_bit(present_); v >= 0; v = next_bit(present_, v))
        best = std::max(best, degree(v));
    return best;
}

VertexList Graph::min_degree_vertices() const {
    int delta = min_degree();
    VertexList out;
    for (Vertex v = first_bit(present_); v >= 0; v = next_bit(present_, v))
        if (degree(v) == delta) out.push_back(v);
    return out;
}

Graph Graph::without_closed_neighborhood(Vertex v) const {
    Graph g = *this;
    g.present_ -= closed_neighbor_mask(v);
    return g;
}

Graph Graph::restricted_to(const Bits& mask) const {
    if (static_cast<int>(mask.size()) != n_)
        throw InvalidInputError("presence mask has wrong size");
    Graph g = *this;
    g.present_ &= mask;
    return g;
}

Graph Graph::without_vertex(Vertex v) const {
    require_present(v);
    Graph g = *this;
    g.present_.reset(v);
    return g;
}

std::vector<Bits> Graph::component_masks() const {
    std::vector<Bits> out;
    Bits todo = present_;
    while (todo.any()) {
        Vertex start = first_bit(todo);
        Bits comp(n_);
        Bits frontier(n_);
        comp.set(start);
        frontier.set(start);
        while (frontier.any()) {
            Bits next(n_);
            for (Vertex v = first_bit(frontier); v >= 0; v = next_bit(frontier, v))
                next |= adj_[v];
            next &= present_;
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        todo -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexList> Graph::connected_components() const {
    std::vector<VertexList> out;
    for (const Bits& m : component_masks()) out.push_back(to_vertex_list(m));
    return out;
}

int Graph::component_count() const { return static_cast<int>(component_masks().size()); }

bool Graph::is_independent_set(const VertexList& s) const {
    return is_independent_set(to_mask(n_, s));
}

bool Graph::is_independent_set(const Bits& s) const {
    for (Vertex v = first_bit(s); v >= 0; v = next_bit(s, v)) {
        require_present(v);
        if ((adj_[v] & s).any()) return false;
    }
    return true;
}

bool Graph::is_clique(const VertexList& s) const { return is_clique(to_mask(n_, s)); }

bool Graph::is_clique(const Bits& s) const {
    for (Vertex v = first_bit(s); v >= 0; v = next_bit(s, v)) {
        require_present(v);
        Bits rest = s;
        rest.reset(v);
        if (!rest.is_subset_of(adj_[v])) return false;
    }
    return true;
}

bool Graph::is_simplicial(Vertex v) const {
    Bits nb = neighbor_mask(v);
    for (Vertex u = first_bit(nb); u >= 0; u = next_bit(nb, u)) {
        Bits rest = nb;
        rest.reset(u);
        if (!rest.is_subset_of(adj_[u])) return false;
    }
    return true;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    for (Vertex u = first_bit(present_); u >= 0; u = next_bit(present_, u)) {
        Bits nb = adj_[u] & present_;
        for (Vertex v = next_bit(nb, u); v >= 0; v = next_bit(nb, v))
            out.emplace_back(u, v);
    }
    return out;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_ || present_ != other.present_) return false;
    for (Vertex v = first_bit(present_); v >= 0; v = next_bit(present_, v))
        if ((adj_[v] & present_) != (other.adj_[v] & present_)) return false;
    return true;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    for (const Graph& g : parts) total += g.label_count();
    std::vector<Edge> edges;
    int offset = 0;
    Bits absent_shifted; // labels to drop in the result
    VertexList absent;
    for (const Graph& g : parts) {
        for (const auto& [u, v] : g.edge_list()) edges.emplace_back(u + offset, v + offset);
        for (Vertex v = 0; v < g.label_count(); ++v)
            if (!g.is_present(v)) absent.push_back(v + offset);
        offset += g.label_count();
    }
    Graph out(total, edges);
    if (absent.empty()) return out;
    Bits keep(total);
    keep.set();
    for (Vertex v : absent) keep.reset(v);
    return out.restricted_to(keep);
}

VertexList to_vertex_list(const Bits& mask) {
    VertexList out;
    out.reserve(mask.count());
    for (Vertex v = first_bit(mask); v >= 0; v = next_bit(mask, v))
        out.push_back(v);
    return out;
}

Bits to_mask(int n, const VertexList& labels) {
    Bits m(n);
    for (Vertex v : labels) {
        if (v < 0 || v >= n) throw InvalidVertexError("label " + std::to_string(v) + " out of range");
        m.set(v);
    }
    return m;
}

} // namespace mingreedy
