#include "mingreedy/interval.hpp"

#include <algorithm>

namespace mingreedy {

namespace {

void require_well_formed(const IntervalRepresentation& rep) {
    for (const Interval& iv : rep.intervals)
        if (iv.lo > iv.hi) throw InvalidIntervalError("interval with lo > hi");
}

} // namespace

Graph graph_from_intervals(const IntervalRepresentation& rep) {
    require_well_formed(rep);
    const int n = rep.size();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rep.intervals[u].intersects(rep.intervals[v])) edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool is_unit(const IntervalRepresentation& rep) {
    require_well_formed(rep);
    for (int v = 1; v < rep.size(); ++v)
        if (rep.intervals[v].hi - rep.intervals[v].lo !=
            rep.intervals[0].hi - rep.intervals[0].lo)
            return false;
    return true;
}

TreeDecomposition clique_path(const IntervalRepresentation& rep) {
    require_well_formed(rep);
    const int n = rep.size();
    // Sweep the right endpoints left to right; the intervals covering each
    // right endpoint form a candidate clique (Helly property of intervals).
    std::vector<Rational> points;
    for (const Interval& iv : rep.intervals) points.push_back(iv.hi);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Bits> sweep;
    for (const Rational& p : points) {
        Bits bag(n);
        for (int v = 0; v < n; ++v)
            if (rep.intervals[v].lo <= p && p <= rep.intervals[v].hi) bag.set(v);
        if (sweep.empty() || bag != sweep.back()) sweep.push_back(std::move(bag));
    }
    TreeDecomposition td;
    std::vector<Bits> kept;
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < sweep.size() && maximal; ++j)
            if (i != j && sweep[i].is_subset_of(sweep[j]) && sweep[i] != sweep[j]) maximal = false;
        if (maximal) kept.push_back(sweep[i]);
    }
    for (const Bits& bag : kept) td.bags.push_back(to_vertex_list(bag));
    for (int i = 0; i + 1 < static_cast<int>(kept.size()); ++i) td.edges.emplace_back(i, i + 1);
    return td;
}

bool validate_representation(const IntervalRepresentation& rep, const Graph& g) {
    if (rep.size() != g.label_count()) return false;
    require_well_formed(rep);
    for (Vertex u : g.present_vertices())
        for (Vertex v : g.present_vertices()) {
            if (u >= v) continue;
            if (rep.intervals[u].intersects(rep.intervals[v]) != g.has_edge(u, v)) return false;
        }
    return true;
}

} // namespace mingreedy
