#include "mingreedy/mis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "mingreedy/chordal.hpp"

namespace mingreedy {

std::string to_string(MISMethod m) {
    return m == MISMethod::simplicial ? "simplicial" : "branch_and_bound";
}

MISResult mis_chordal(const Graph& g) {
    if (!is_chordal(g)) throw ClassViolationError("mis_chordal requires a chordal graph");
    MISResult result;
    result.method = MISMethod::simplicial;
    Graph cur = g;
    while (!cur.empty()) {
        Vertex pick = -1;
        for (Vertex v : cur.present_vertices())
            if (cur.is_simplicial(v)) {
                pick = v;
                break;
            }
        if (pick < 0) throw ClassViolationError("no simplicial vertex found");
        result.set.push_back(pick);
        cur = cur.without_closed_neighborhood(pick);
    }
    result.size = static_cast<int>(result.set.size());
    return result;
}

namespace {

/// Branch-and-bound over compressed uint64 masks (present vertices are
/// remapped to 0..p-1, p <= 64).
class BranchAndBound {
public:
    explicit BranchAndBound(const Graph& g) : labels_(g.present_vertices()) {
        const int p = static_cast<int>(labels_.size());
        if (p > 64) throw SizeLimitError("branch and bound supports at most 64 present vertices");
        adj_.assign(p, 0);
        std::vector<int> slot(g.label_count(), -1);
        for (int i = 0; i < p; ++i) slot[labels_[i]] = i;
        for (int i = 0; i < p; ++i) {
            Bits nb = g.neighbor_mask(labels_[i]);
            for (Vertex u = first_bit(nb); u >= 0; u = next_bit(nb, u))
                adj_[i] |= (1ULL << slot[u]);
        }
        full_ = (p == 64) ? ~0ULL : ((1ULL << p) - 1);
    }

    VertexList solve() {
        best_ = 0;
        best_set_ = 0;
        recurse(full_, 0, 0);
        VertexList out;
        for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
            if (best_set_ >> i & 1) out.push_back(labels_[i]);
        return out;
    }

private:
    VertexList labels_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t full_ = 0;
    int best_ = 0;
    std::uint64_t best_set_ = 0;

    int matching_bound(std::uint64_t mask) const {
        // |IS| <= remaining - |matching|: each matched edge excludes a vertex.
        int matched = 0;
        std::uint64_t avail = mask;
        while (avail) {
            int v = std::countr_zero(avail);
            avail &= avail - 1;
            std::uint64_t nb = adj_[v] & avail;
            if (nb) {
                int u = std::countr_zero(nb);
                avail &= ~(1ULL << u);
                ++matched;
            }
        }
        return std::popcount(mask) - matched;
    }

    void recurse(std::uint64_t mask, int size, std::uint64_t chosen) {
        // Degree 0/1 vertices are simplicial, so taking them greedily keeps
        // some maximum independent set reachable.
        bool changed = true;
        while (changed && mask) {
            changed = false;
            for (std::uint64_t scan = mask; scan;) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                std::uint64_t nb = adj_[v] & mask;
                if (std::popcount(nb) <= 1) {
                    chosen |= (1ULL << v);
                    ++size;
                    mask &= ~(nb | (1ULL << v));
                    changed = true;
                    break;
                }
            }
        }
        if (!mask) {
            if (size > best_) {
                best_ = size;
                best_set_ = chosen;
            }
            return;
        }
        if (size + matching_bound(mask) <= best_) return;
        int pick = -1, pick_deg = -1;
        for (std::uint64_t scan = mask; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int d = std::popcount(adj_[v] & mask);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        recurse(mask & ~(adj_[pick] | (1ULL << pick)), size + 1, chosen | (1ULL << pick));
        recurse(mask & ~(1ULL << pick), size, chosen);
    }
};

} // namespace

MISResult mis_bruteforce(const Graph& g, int limit) {
    if (g.present_count() > limit)
        throw SizeLimitError("graph with " + std::to_string(g.present_count()) +
                             " vertices exceeds branch-and-bound limit " + std::to_string(limit));
    BranchAndBound bb(g);
    MISResult result;
    result.method = MISMethod::branch_and_bound;
    result.set = bb.solve();
    result.size = static_cast<int>(result.set.size());
    return result;
}

MISResult max_is_containing(const Graph& g, const VertexList& forced, int limit) {
    if (!g.is_independent_set(forced))
        throw InvalidInputError("forced set is not an independent set");
    if (g.present_count() > limit)
        throw SizeLimitError("graph exceeds branch-and-bound limit");
    Graph reduced = g;
    for (Vertex v : forced)
        if (reduced.is_present(v)) reduced = reduced.without_closed_neighborhood(v);
    BranchAndBound bb(reduced);
    MISResult result;
    result.method = MISMethod::branch_and_bound;
    result.set = forced;
    for (Vertex v : bb.solve()) result.set.push_back(v);
    std::sort(result.set.begin(), result.set.end());
    result.size = static_cast<int>(result.set.size());
    return result;
}

} // namespace mingreedy
