#include "mingreedy/chordal.hpp"

#include <algorithm>
#include <list>
#include <numeric>

namespace mingreedy {

EliminationOrdering lex_bfs(const Graph& g) {
    EliminationOrdering order;
    order.reserve(g.present_count());
    std::list<VertexList> cells;
    VertexList all = g.present_vertices();
    if (all.empty()) return order;
    cells.push_back(std::move(all));
    while (!cells.empty()) {
        VertexList& front = cells.front();
        Vertex v = front.front();
        front.erase(front.begin());
        if (front.empty()) cells.pop_front();
        order.push_back(v);
        Bits nb = g.neighbor_mask(v);
        for (auto it = cells.begin(); it != cells.end();) {
            VertexList hit, miss;
            for (Vertex u : *it)
                (nb.test(u) ? hit : miss).push_back(u);
            if (hit.empty() || miss.empty()) {
                ++it;
                continue;
            }
            *it = std::move(miss);
            cells.insert(it, std::move(hit));
            ++it;
        }
    }
    return order;
}

bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& order) {
    const int n = g.label_count();
    if (static_cast<int>(order.size()) != g.present_count())
        throw InvalidOrderingError("ordering does not cover the present vertices");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        Vertex v = order[i];
        if (!g.is_present(v)) throw InvalidOrderingError("ordering contains an absent vertex");
        if (pos[v] != -1) throw InvalidOrderingError("ordering repeats a vertex");
        pos[v] = i;
    }
    // Classic test: the earliest later-neighbor of v must dominate the rest
    // of v's later neighbors.
    for (Vertex v : order) {
        Bits later(n);
        Bits nb = g.neighbor_mask(v);
        for (Vertex u = first_bit(nb); u >= 0; u = next_bit(nb, u))
            if (pos[u] > pos[v]) later.set(u);
        if (later.none()) continue;
        Vertex w = -1;
        for (Vertex u = first_bit(later); u >= 0; u = next_bit(later, u))
            if (w < 0 || pos[u] < pos[w]) w = u;
        later.reset(w);
        if (!later.is_subset_of(g.neighbor_mask(w))) return false;
    }
    return true;
}

bool is_chordal(const Graph& g) {
    if (g.empty()) return true;
    EliminationOrdering order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    return is_perfect_elimination_ordering(g, order);
}

VertexList simplicial_vertices(const Graph& g) {
    VertexList out;
    for (Vertex v : g.present_vertices())
        if (g.is_simplicial(v)) out.push_back(v);
    return out;
}

namespace {

std::vector<Bits> maximal_clique_masks(const Graph& g) {
    const int n = g.label_count();
    EliminationOrdering peo = lex_bfs(g);
    std::reverse(peo.begin(), peo.end());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(peo.size()); ++i) pos[peo[i]] = i;
    std::vector<Bits> bags;
    for (Vertex v : peo) {
        Bits bag(n);
        bag.set(v);
        Bits nb = g.neighbor_mask(v);
        for (Vertex u = first_bit(nb); u >= 0; u = next_bit(nb, u))
            if (pos[u] > pos[v]) bag.set(u);
        bags.push_back(std::move(bag));
    }
    std::vector<Bits> out;
    for (std::size_t i = 0; i < bags.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < bags.size() && maximal; ++j)
            if (i != j && bags[i].is_subset_of(bags[j]) && bags[i] != bags[j]) maximal = false;
        if (maximal) out.push_back(bags[i]);
    }
    return out;
}

struct EdgeCandidate {
    int a, b;
    long long weight;
};

std::vector<EdgeCandidate> clique_graph_edges(const std::vector<Bits>& bags) {
    std::vector<EdgeCandidate> edges;
    for (int i = 0; i < static_cast<int>(bags.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(bags.size()); ++j) {
            long long w = static_cast<long long>((bags[i] & bags[j]).count());
            if (w > 0) edges.push_back({i, j, w});
        }
    std::stable_sort(edges.begin(), edges.end(),
                     [](const EdgeCandidate& x, const EdgeCandidate& y) { return x.weight > y.weight; });
    return edges;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

} // namespace

std::vector<VertexList> maximal_cliques(const Graph& g) {
    if (!is_chordal(g)) throw ClassViolationError("maximal_cliques requires a chordal graph");
    std::vector<VertexList> out;
    for (const Bits& bag : maximal_clique_masks(g)) out.push_back(to_vertex_list(bag));
    return out;
}

TreeDecomposition clique_tree(const Graph& g) {
    if (!is_chordal(g)) throw ClassViolationError("clique_tree requires a chordal graph");
    std::vector<Bits> bags = maximal_clique_masks(g);
    TreeDecomposition td;
    for (const Bits& bag : bags) td.bags.push_back(to_vertex_list(bag));
    UnionFind uf(static_cast<int>(bags.size()));
    for (const EdgeCandidate& e : clique_graph_edges(bags))
        if (uf.merge(e.a, e.b)) td.edges.emplace_back(e.a, e.b);
    return td;
}

bool validate_tree_decomposition(const TreeDecomposition& td, const Graph& g) {
    const int n = g.label_count();
    const int q = static_cast<int>(td.bags.size());
    std::vector<Bits> bags;
    Bits cover(n);
    for (const VertexList& bag : td.bags) {
        Bits m(n);
        for (Vertex v : bag) {
            if (v < 0 || v >= n || !g.is_present(v)) return false;
            m.set(v);
        }
        cover |= m;
        bags.push_back(std::move(m));
    }
    if (cover != g.present_mask()) return false; // tw1
    for (const auto& [u, v] : g.edge_list()) {   // tw2
        bool found = false;
        for (const Bits& bag : bags)
            if (bag.test(u) && bag.test(v)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    // Tree shape: acyclic, and either one tree over all bags or one per
    // graph component.
    UnionFind uf(q);
    std::vector<std::vector<int>> bag_adj(q);
    for (const auto& [a, b] : td.edges) {
        if (a < 0 || a >= q || b < 0 || b >= q || a == b) return false;
        if (!uf.merge(a, b)) return false;
        bag_adj[a].push_back(b);
        bag_adj[b].push_back(a);
    }
    int forest_comps = 0;
    for (int i = 0; i < q; ++i)
        if (uf.find(i) == i) ++forest_comps;
    if (!(forest_comps == std::min(q, 1) || forest_comps == g.component_count())) return false;
    // tw3: the bags containing each vertex form a connected subtree.
    for (Vertex v : g.present_vertices()) {
        std::vector<int> holding;
        for (int i = 0; i < q; ++i)
            if (bags[i].test(v)) holding.push_back(i);
        if (holding.empty()) return false;
        std::vector<char> in_holding(q, 0), seen(q, 0);
        for (int i : holding) in_holding[i] = 1;
        std::vector<int> stack = {holding.front()};
        seen[holding.front()] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            ++reached;
            for (int j : bag_adj[i])
                if (in_holding[j] && !seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        if (reached != static_cast<int>(holding.size())) return false;
    }
    return true;
}

namespace {

/// Enumerates every maximum-weight spanning tree of the clique intersection
/// graph by choosing, within each Kruskal weight class, a spanning forest of
/// the components inherited from heavier classes. Stops as soon as a 2-leaf
/// tree is found (no tree on >= 2 nodes can do better).
class LeafageSearch {
public:
    LeafageSearch(int q, const std::vector<EdgeCandidate>& sorted_edges) : q_(q) {
        for (const EdgeCandidate& e : sorted_edges) {
            if (classes_.empty() || classes_.back().front().weight != e.weight)
                classes_.push_back({});
            classes_.back().push_back(e);
        }
        // Component counts after each class are the same for every
        // maximum-weight spanning tree; record them as targets.
        UnionFind uf(q);
        int comps = q;
        for (const auto& cls : classes_) {
            for (const EdgeCandidate& e : cls)
                if (uf.merge(e.a, e.b)) --comps;
            targets_.push_back(comps);
        }
        comp_.resize(q);
        std::iota(comp_.begin(), comp_.end(), 0);
        ncomp_ = q;
        deg_.assign(q, 0);
    }

    int run() {
        best_ = q_; // a tree on q nodes has at most q-1 leaves
        descend(0, 0);
        return best_;
    }

private:
    int q_;
    std::vector<std::vector<EdgeCandidate>> classes_;
    std::vector<int> targets_;
    std::vector<int> comp_;
    int ncomp_;
    std::vector<int> deg_;
    int best_ = 0;

    void finish() {
        int leaves = 0;
        for (int d : deg_) leaves += (d == 1);
        best_ = std::min(best_, leaves);
    }

    void descend(std::size_t ci, std::size_t ei) {
        if (best_ == 2) return;
        if (ci == classes_.size()) {
            finish();
            return;
        }
        const auto& cls = classes_[ci];
        if (ei == cls.size()) {
            if (ncomp_ == targets_[ci]) descend(ci + 1, 0);
            return;
        }
        // Even taking every remaining edge of this class cannot reach the
        // target component count: dead branch.
        if (ncomp_ - static_cast<int>(cls.size() - ei) > targets_[ci]) return;
        const EdgeCandidate& e = cls[ei];
        int ca = comp_[e.a], cb = comp_[e.b];
        if (ca == cb) {
            descend(ci, ei + 1);
            return;
        }
        // Include the edge.
        std::vector<int> saved = comp_;
        for (int& c : comp_)
            if (c == ca) c = cb;
        --ncomp_;
        ++deg_[e.a];
        ++deg_[e.b];
        descend(ci, ei + 1);
        ++ncomp_;
        --deg_[e.a];
        --deg_[e.b];
        comp_ = std::move(saved);
        // Exclude it.
        descend(ci, ei + 1);
    }
};

} // namespace

int leafage_small(const Graph& g, int bag_limit) {
    if (g.empty()) throw EmptyGraphError("leafage of an empty graph");
    if (g.component_count() != 1) throw InvalidInputError("leafage requires a connected graph");
    if (!is_chordal(g)) throw ClassViolationError("leafage requires a chordal graph");
    std::vector<Bits> bags = maximal_clique_masks(g);
    const int q = static_cast<int>(bags.size());
    if (q > bag_limit)
        throw SizeLimitError("clique count " + std::to_string(q) + " exceeds leafage limit " +
                             std::to_string(bag_limit));
    if (q == 1) return 1;
    LeafageSearch search(q, clique_graph_edges(bags));
    return search.run();
}

} // namespace mingreedy
