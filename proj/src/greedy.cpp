#include "mingreedy/greedy.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "mingreedy/rng.hpp"

namespace mingreedy {

std::string TieBreakPolicy::name() const {
    switch (kind) {
    case Kind::first_label: return "first-label";
    case Kind::scripted: return "scripted";
    case Kind::seeded_random: return "random";
    case Kind::simplicial_first: return "simplicial-first";
    case Kind::adversarial_exhaustive: return "adversarial";
    case Kind::benevolent_exhaustive: return "benevolent";
    }
    return "unknown";
}

namespace {

GreedyPick make_pick(const Graph& before, const Graph& after, Vertex v, int tie_set_size) {
    GreedyPick pick;
    pick.vertex = v;
    pick.degree = before.degree(v);
    pick.tie_set_size = tie_set_size;
    pick.components_before = before.component_count();
    pick.components_after = after.component_count();
    return pick;
}

/// Exhaustive search over all greedy executions of one graph. States are
/// present-vertex sets compressed to uint64 masks; connected components are
/// solved independently and summed.
class ExhaustiveGreedy {
public:
    explicit ExhaustiveGreedy(const Graph& g) : labels_(g.present_vertices()) {
        const int p = static_cast<int>(labels_.size());
        if (p > 64) throw SizeLimitError("exhaustive greedy supports at most 64 vertices");
        adj_.assign(p, 0);
        std::vector<int> slot(g.label_count(), -1);
        for (int i = 0; i < p; ++i) slot[labels_[i]] = i;
        for (int i = 0; i < p; ++i) {
            Bits nb = g.neighbor_mask(labels_[i]);
            for (Vertex u = first_bit(nb); u >= 0; u = next_bit(nb, u))
                adj_[i] |= (1ULL << slot[u]);
        }
        full_ = p == 0 ? 0 : (p == 64 ? ~0ULL : ((1ULL << p) - 1));
    }

    std::pair<int, int> min_max() { return value(full_); }

    /// Pick sequence (original labels) realizing the minimum (or maximum)
    /// over complete executions, scheduled so every pick has globally
    /// minimum degree at its step.
    VertexList witness_sequence(bool maximize) {
        value(full_);
        std::vector<std::uint64_t> agenda = components(full_);
        VertexList order;
        while (!agenda.empty()) {
            std::uint64_t all = 0;
            for (std::uint64_t m : agenda) all |= m;
            int global_delta = 65;
            for (std::uint64_t scan = all; scan;) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                global_delta = std::min(global_delta, std::popcount(adj_[v] & all));
            }
            for (std::size_t i = 0; i < agenda.size(); ++i) {
                const Entry& e = memo_.at(agenda[i]);
                int planned = maximize ? e.argmax : e.argmin;
                if (std::popcount(adj_[planned] & agenda[i]) != global_delta) continue;
                order.push_back(labels_[planned]);
                std::uint64_t rest =
                    agenda[i] & ~(adj_[planned] | (1ULL << planned));
                agenda.erase(agenda.begin() + static_cast<long>(i));
                for (std::uint64_t m : components(rest)) agenda.push_back(m);
                break;
            }
        }
        return order;
    }

private:
    struct Entry {
        int min = 0, max = 0;
        int argmin = -1, argmax = -1;
    };

    VertexList labels_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t full_ = 0;
    std::unordered_map<std::uint64_t, Entry> memo_;

    std::vector<std::uint64_t> components(std::uint64_t mask) const {
        std::vector<std::uint64_t> out;
        while (mask) {
            std::uint64_t comp = mask & -mask;
            for (;;) {
                std::uint64_t grown = comp;
                for (std::uint64_t scan = comp; scan;) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    grown |= adj_[v] & mask;
                }
                if (grown == comp) break;
                comp = grown;
            }
            out.push_back(comp);
            mask &= ~comp;
        }
        return out;
    }

    std::pair<int, int> value(std::uint64_t mask) {
        int lo = 0, hi = 0;
        for (std::uint64_t comp : components(mask)) {
            const Entry& e = connected_value(comp);
            lo += e.min;
            hi += e.max;
        }
        return {lo, hi};
    }

    const Entry& connected_value(std::uint64_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        int delta = 65;
        for (std::uint64_t scan = mask; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            delta = std::min(delta, std::popcount(adj_[v] & mask));
        }
        Entry entry;
        entry.min = std::popcount(mask) + 1; // above any possible value
        entry.max = 0;
        for (std::uint64_t scan = mask; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (std::popcount(adj_[v] & mask) != delta) continue;
            auto [lo, hi] = value(mask & ~(adj_[v] | (1ULL << v)));
            if (1 + lo < entry.min) {
                entry.min = 1 + lo;
                entry.argmin = v;
            }
            if (1 + hi > entry.max) {
                entry.max = 1 + hi;
                entry.argmax = v;
            }
        }
        return memo_.emplace(mask, entry).first->second;
    }
};

GreedyTrace replay_sequence(const Graph& g, const VertexList& order) {
    GreedyTrace trace;
    Graph cur = g;
    for (Vertex v : order) {
        int delta = cur.min_degree();
        int ties = static_cast<int>(cur.min_degree_vertices().size());
        if (cur.degree(v) != delta)
            throw InvalidInputError("witness pick is not a minimum-degree vertex");
        Graph after = cur.without_closed_neighborhood(v);
        trace.picks.push_back(make_pick(cur, after, v, ties));
        trace.solution.push_back(v);
        cur = std::move(after);
    }
    if (!cur.empty()) throw InvalidInputError("witness sequence does not exhaust the graph");
    return trace;
}

std::pair<int, GreedyTrace> exhaustive(const Graph& g, bool maximize, int limit) {
    if (g.present_count() > limit)
        throw SizeLimitError("graph with " + std::to_string(g.present_count()) +
                             " vertices exceeds exhaustive limit " + std::to_string(limit));
    ExhaustiveGreedy search(g);
    auto [lo, hi] = search.min_max();
    GreedyTrace trace = replay_sequence(g, search.witness_sequence(maximize));
    return {maximize ? hi : lo, trace};
}

} // namespace

GreedyTrace greedy_run(const Graph& g, const TieBreakPolicy& policy, int exhaustive_limit) {
    using Kind = TieBreakPolicy::Kind;
    if (policy.kind == Kind::adversarial_exhaustive)
        return exhaustive(g, false, exhaustive_limit).second;
    if (policy.kind == Kind::benevolent_exhaustive)
        return exhaustive(g, true, exhaustive_limit).second;

    std::vector<int> rank;
    if (policy.kind == Kind::scripted) {
        rank.assign(g.label_count(), -1);
        if (static_cast<int>(policy.preference.size()) != g.label_count())
            throw InvalidInputError("scripted preference must rank every label");
        for (int i = 0; i < static_cast<int>(policy.preference.size()); ++i) {
            Vertex v = policy.preference[i];
            if (v < 0 || v >= g.label_count() || rank[v] != -1)
                throw InvalidInputError("scripted preference must be a permutation of the labels");
            rank[v] = i;
        }
    }
    SplitMix64 rng(policy.seed);

    GreedyTrace trace;
    Graph cur = g;
    while (!cur.empty()) {
        VertexList ties = cur.min_degree_vertices();
        Vertex v = ties.front();
        switch (policy.kind) {
        case Kind::first_label:
            break;
        case Kind::scripted:
            for (Vertex u : ties)
                if (rank[u] < rank[v]) v = u;
            break;
        case Kind::seeded_random:
            v = ties[rng.below(ties.size())];
            break;
        case Kind::simplicial_first:
            for (Vertex u : ties)
                if (cur.is_simplicial(u)) {
                    v = u;
                    break;
                }
            break;
        default:
            break;
        }
        Graph after = cur.without_closed_neighborhood(v);
        trace.picks.push_back(make_pick(cur, after, v, static_cast<int>(ties.size())));
        trace.solution.push_back(v);
        cur = std::move(after);
    }
    return trace;
}

std::pair<int, GreedyTrace> adversarial_value(const Graph& g, int exhaustive_limit) {
    return exhaustive(g, false, exhaustive_limit);
}

std::pair<int, GreedyTrace> benevolent_value(const Graph& g, int exhaustive_limit) {
    return exhaustive(g, true, exhaustive_limit);
}

bool validate_trace(const Graph& g, const GreedyTrace& t) {
    Graph cur = g;
    if (t.solution.size() != t.picks.size()) return false;
    for (std::size_t i = 0; i < t.picks.size(); ++i) {
        const GreedyPick& pick = t.picks[i];
        if (t.solution[i] != pick.vertex) return false;
        if (!cur.is_present(pick.vertex)) return false;
        int delta = cur.min_degree();
        if (cur.degree(pick.vertex) != delta) return false;
        if (pick.degree != delta) return false;
        if (pick.tie_set_size != static_cast<int>(cur.min_degree_vertices().size())) return false;
        if (pick.components_before != cur.component_count()) return false;
        Graph after = cur.without_closed_neighborhood(pick.vertex);
        if (pick.components_after != after.component_count()) return false;
        cur = std::move(after);
    }
    return cur.empty();
}

} // namespace mingreedy
