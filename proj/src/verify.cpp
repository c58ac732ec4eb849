#include "mingreedy/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <unordered_set>

#include "mingreedy/chordal.hpp"
#include "mingreedy/interval.hpp"
#include "mingreedy/io.hpp"
#include "mingreedy/ledger.hpp"
#include "mingreedy/mis.hpp"
#include "mingreedy/parallel.hpp"
#include "mingreedy/rng.hpp"

namespace mingreedy {

bool SuiteResult::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void SuiteResult::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

void SuiteResult::merge(const SuiteResult& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

std::string ratio_str(long long a, long long b) {
    return std::to_string(a) + "/" + std::to_string(b);
}

std::string decimal_str(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", to_double(r));
    return buf;
}

Graph random_general_graph(int n, unsigned edge_percent, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_percent)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

VertexList random_independent_set(const Graph& g, SplitMix64& rng) {
    VertexList order = g.present_vertices();
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(i + 1)]);
    Bits chosen(g.label_count());
    for (Vertex v : order) {
        if ((g.neighbor_mask(v) & chosen).any()) continue;
        if (rng.chance(60)) chosen.set(v);
    }
    return to_vertex_list(chosen);
}

/// Compressed adjacency over the present vertices, for the subset scans.
struct PackedGraph {
    VertexList labels;
    std::vector<std::uint64_t> adj;
    std::uint64_t full = 0;

    explicit PackedGraph(const Graph& g) : labels(g.present_vertices()) {
        const int p = static_cast<int>(labels.size());
        if (p > 62) throw SizeLimitError("packed scan supports at most 62 vertices");
        adj.assign(p, 0);
        std::vector<int> slot(g.label_count(), -1);
        for (int i = 0; i < p; ++i) slot[labels[i]] = i;
        for (int i = 0; i < p; ++i) {
            Bits nb = g.neighbor_mask(labels[i]);
            for (Vertex u = first_bit(nb); u >= 0; u = next_bit(nb, u))
                adj[i] |= (1ULL << slot[u]);
        }
        full = p == 0 ? 0 : ((1ULL << p) - 1);
    }

    std::uint64_t pack(const VertexList& set) const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (std::find(set.begin(), set.end(), labels[i]) != set.end()) m |= (1ULL << i);
        return m;
    }
};

std::vector<std::uint64_t> all_maximum_independent_sets_packed(const PackedGraph& pg) {
    const int p = static_cast<int>(pg.labels.size());
    if (p > 20) throw SizeLimitError("maximum-set enumeration supports at most 20 vertices");
    int best = 0;
    std::vector<std::uint64_t> sets = {0};
    for (std::uint64_t s = 1; s < (1ULL << p); ++s) {
        bool independent = true;
        for (std::uint64_t scan = s; scan && independent;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (pg.adj[v] & s) independent = false;
        }
        if (!independent) continue;
        int size = std::popcount(s);
        if (size > best) {
            best = size;
            sets.clear();
        }
        if (size == best) sets.push_back(s);
    }
    return sets;
}

/// Largest j over every reachable state of every complete greedy execution,
/// with j measured against the surviving part of `ref`. States are shared
/// between executions (the surviving reference set is a function of the
/// present set), so a mask-level search covers all executions.
int max_j_all_executions(const PackedGraph& pg, std::uint64_t ref) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> todo;
    seen.insert(pg.full);
    todo.push_back(pg.full);
    int maxj = 0;
    while (!todo.empty()) {
        std::uint64_t mask = todo.back();
        todo.pop_back();
        if (!mask) continue;
        int delta = 65;
        for (std::uint64_t scan = mask; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            delta = std::min(delta, std::popcount(pg.adj[v] & mask));
        }
        for (std::uint64_t scan = mask; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (std::popcount(pg.adj[v] & mask) != delta) continue;
            std::uint64_t closed = (pg.adj[v] | (1ULL << v)) & mask;
            maxj = std::max(maxj, std::popcount(closed & ref & mask));
            std::uint64_t child = mask & ~closed;
            if (seen.insert(child).second) todo.push_back(child);
        }
    }
    return maxj;
}

/// Continue a chordal graph by random clique attachments up to n vertices,
/// then relabel uniformly.
Graph extend_chordal_and_relabel(const Graph& prefix, int n, SplitMix64& rng) {
    std::vector<Bits> adj(n, Bits(n));
    std::vector<Edge> edges;
    for (auto [u, v] : prefix.edge_list()) {
        adj[u].set(v);
        adj[v].set(u);
        edges.emplace_back(u, v);
    }
    for (int v = prefix.label_count(); v < n; ++v) {
        Vertex u = static_cast<Vertex>(rng.below(v));
        Bits clique(n);
        clique.set(u);
        Bits candidates = adj[u];
        while (candidates.any() && rng.chance(55)) {
            VertexList pool = to_vertex_list(candidates);
            Vertex c = pool[rng.below(pool.size())];
            clique.set(c);
            candidates &= adj[c];
        }
        for (Vertex c = first_bit(clique); c >= 0; c = next_bit(clique, c)) {
            adj[v].set(c);
            adj[c].set(v);
            edges.emplace_back(c, v);
        }
    }
    VertexList perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<Edge> mapped;
    for (auto [u, v] : edges) mapped.emplace_back(perm[u], perm[v]);
    return Graph(n, mapped);
}

/// Random connected chordal graph for the fuzz suites. Mixes the plain
/// incremental generator with instances grown around a tight-family core,
/// so the population includes graphs where worst-case greedy genuinely
/// loses ground (plain clique attachment almost never produces them).
Graph random_connected_chordal_mixed(int n, SplitMix64& rng) {
    if (n >= 9 && rng.chance(40)) {
        Graph core;
        if (n >= 16 && rng.chance(35))
            core = chordal_tight(3).graph;
        else if (n >= 15 && rng.chance(30))
            core = interval_tight(2).graph;
        else
            core = rng.chance(50) ? chordal_tight(2).graph : interval_tight(1).graph;
        return extend_chordal_and_relabel(core, n, rng);
    }
    return random_chordal(n, rng.next()).graph;
}

/// Random interval representation for the fuzz suites: the plain uniform
/// generator, random unit-length intervals (which organically form the
/// triangle-chain traps), or a tight core plus random unit intervals.
/// Labels are shuffled.
IntervalRepresentation random_interval_rep_mixed(int n, SplitMix64& rng) {
    IntervalRepresentation rep;
    unsigned style = static_cast<unsigned>(rng.below(10));
    if (style < 4) {
        rep = *random_interval(n, rng.next()).representation;
    } else if (style < 7 || n < 9) {
        const long long window = 3LL * n;
        for (int v = 0; v < n; ++v) {
            long long a = static_cast<long long>(rng.below(window + 1));
            rep.intervals.push_back({Rational(a), Rational(a + 8)});
        }
    } else {
        int k = (n >= 15 && rng.chance(50)) ? 2 : 1;
        rep = *interval_tight(k).representation;
        const long long window = 28LL * k + 14;
        for (int v = 6 * k + 3; v < n; ++v) {
            long long a = static_cast<long long>(rng.below(window));
            rep.intervals.push_back({Rational(a, 8), Rational(a + 8, 8)});
        }
    }
    for (int i = n - 1; i > 0; --i)
        std::swap(rep.intervals[i], rep.intervals[rng.below(i + 1)]);
    return rep;
}

struct TrialOutcome {
    bool pass = true;
    std::string note;
};

void fail(TrialOutcome& out, const std::string& note) {
    if (out.pass) {
        out.pass = false;
        out.note = note;
    }
}

CheckResult fold_trials(const std::string& name, const std::vector<TrialOutcome>& outcomes,
                        const std::string& extra = "") {
    int passed = 0;
    std::string first_failure;
    for (const TrialOutcome& t : outcomes) {
        if (t.pass)
            ++passed;
        else if (first_failure.empty())
            first_failure = t.note;
    }
    std::string detail = std::to_string(passed) + "/" + std::to_string(outcomes.size()) + " trials";
    if (!extra.empty()) detail += "; " + extra;
    if (!first_failure.empty()) detail += "; first failure: " + first_failure;
    return {name, passed == static_cast<int>(outcomes.size()), detail};
}

} // namespace

SuiteResult verify_interval_tight_family(int kmax, int exhaustive_limit) {
    SuiteResult r;
    bool sizes_ok = true, identity_ok = true, exhaustive_ok = true;
    std::string note;
    for (int k = 1; k <= kmax; ++k) {
        FamilyInstance inst = interval_tight(k);
        GreedyTrace scripted = greedy_run(inst.graph, TieBreakPolicy::scripted(inst.adversarial_script));
        int opt = mis_chordal(inst.graph).size;
        if (static_cast<int>(scripted.solution.size()) != 2 * k + 1 || opt != 3 * k + 1) {
            sizes_ok = false;
            note = "k=" + std::to_string(k);
        }
        MoveLedger ledger = classify(inst.graph, scripted, inst.optimum_certificate);
        identity_ok = identity_ok && check_identity(ledger);
        if (k <= 3) {
            auto [adv, witness] = adversarial_value(inst.graph, std::max(exhaustive_limit, 6 * k + 3));
            if (adv != 2 * k + 1) exhaustive_ok = false;
            identity_ok = identity_ok &&
                          check_identity(classify(inst.graph, witness, inst.optimum_certificate));
        }
    }
    r.add("interval-tight: scripted greedy 2k+1, optimum 3k+1 (k=1.." + std::to_string(kmax) + ")",
          sizes_ok, note);
    r.add("interval-tight: exhaustive worst case equals the script (k<=3)", exhaustive_ok);
    r.add("interval-tight: Eq.(1) identity on classified runs", identity_ok);
    return r;
}

SuiteResult verify_chordal_tight_family(int kmax, int exhaustive_limit) {
    SuiteResult r;
    bool sizes_ok = true, identity_ok = true, exhaustive_ok = true;
    std::string note;
    for (int k = 2; k <= kmax; ++k) {
        FamilyInstance inst = chordal_tight(k);
        GreedyTrace scripted = greedy_run(inst.graph, TieBreakPolicy::scripted(inst.adversarial_script));
        int opt = mis_chordal(inst.graph).size;
        if (static_cast<int>(scripted.solution.size()) != k + 1 || opt != 2 * k) {
            sizes_ok = false;
            note = "k=" + std::to_string(k);
        }
        MoveLedger ledger = classify(inst.graph, scripted, inst.optimum_certificate);
        identity_ok = identity_ok && check_identity(ledger);
        if (k <= 3) {
            auto [adv, witness] = adversarial_value(inst.graph, exhaustive_limit);
            if (adv != k + 1) exhaustive_ok = false;
            identity_ok = identity_ok &&
                          check_identity(classify(inst.graph, witness, inst.optimum_certificate));
        }
    }
    r.add("chordal-tight: scripted greedy k+1, optimum 2k (k=2.." + std::to_string(kmax) + ")",
          sizes_ok, note);
    r.add("chordal-tight: exhaustive worst case equals the script (k=2,3)", exhaustive_ok);
    r.add("chordal-tight: Eq.(1) identity on classified runs", identity_ok);
    return r;
}

SuiteResult verify_negative_families(int kmax, int exhaustive_limit) {
    SuiteResult r;
    for (bool two_track : {false, true}) {
        const std::string name = two_track ? "two-track" : "permutation";
        bool ok = true, identity_ok = true;
        std::string note;
        for (int k = 3; k <= kmax; ++k) {
            FamilyInstance inst = two_track ? two_track_family(k) : permutation_family(k);
            auto [adv, witness] = adversarial_value(inst.graph, exhaustive_limit);
            int opt = mis_bruteforce(inst.graph).size;
            if (adv != 2 || opt != k || inst.graph.max_degree() != 2 * k - 2) {
                ok = false;
                note = "k=" + std::to_string(k);
            }
            identity_ok = identity_ok &&
                          check_identity(classify(inst.graph, witness, inst.optimum_certificate));
        }
        r.add(name + ": worst case 2, optimum k, max degree 2k-2 (k=3.." + std::to_string(kmax) + ")",
              ok, note);
        r.add(name + ": Eq.(1) identity on classified runs", identity_ok);
    }
    return r;
}

SuiteResult verify_tight_families(int kmax, int exhaustive_limit) {
    SuiteResult r;
    r.merge(verify_interval_tight_family(kmax, exhaustive_limit));
    r.merge(verify_chordal_tight_family(std::min(kmax, 12), exhaustive_limit));
    r.merge(verify_negative_families(std::min(kmax, 10), exhaustive_limit));
    return r;
}

SuiteResult verify_chordal_floor(int trials, int nmax, std::uint64_t seed, int exhaustive_limit) {
    std::vector<TrialOutcome> outcomes(trials);
    std::vector<std::pair<int, int>> ratios(trials);
    parallel_for(trials, [&](int t) {
        SplitMix64 rng(seed + t);
        int n = 4 + static_cast<int>(rng.below(nmax - 3));
        Graph g = random_connected_chordal_mixed(n, rng);
        auto [adv, witness] = adversarial_value(g, exhaustive_limit);
        MISResult opt = mis_chordal(g);
        ratios[t] = {adv, opt.size};
        if (!(Rational(adv, opt.size) > Rational(1, 2)))
            fail(outcomes[t], "trial " + std::to_string(t) + " (n=" + std::to_string(n) +
                                  "): ratio " + ratio_str(adv, opt.size));
        if (!check_identity(classify(g, witness, opt.set)))
            fail(outcomes[t], "identity failed at trial " + std::to_string(t));
    });
    Rational worst(1);
    int suboptimal = 0;
    for (auto [a, b] : ratios) {
        worst = std::min(worst, Rational(a, b));
        if (a < b) ++suboptimal;
    }
    SuiteResult r;
    r.checks.push_back(fold_trials(
        "chordal floor: worst-case ratio strictly above 1/2 on random connected chordal (n<=" +
            std::to_string(nmax) + ")",
        outcomes, "min ratio " + to_string(worst) + ", greedy suboptimal on " +
                      std::to_string(suboptimal) + " instances"));
    return r;
}

SuiteResult verify_interval_floor(int trials, int nmax, std::uint64_t seed, int exhaustive_limit) {
    std::vector<TrialOutcome> outcomes(trials);
    std::vector<std::pair<int, int>> ratios(trials);
    parallel_for(trials, [&](int t) {
        SplitMix64 rng(seed + t);
        int n = 4 + static_cast<int>(rng.below(nmax - 3));
        IntervalRepresentation rep = random_interval_rep_mixed(n, rng);
        Graph g = graph_from_intervals(rep);
        auto [adv, witness] = adversarial_value(g, exhaustive_limit);
        MISResult opt = mis_chordal(g);
        ratios[t] = {adv, opt.size};
        if (!(Rational(adv, opt.size) >= Rational(2, 3)))
            fail(outcomes[t], "trial " + std::to_string(t) + " (n=" + std::to_string(n) +
                                  "): ratio " + ratio_str(adv, opt.size));
        if (!check_identity(classify(g, witness, opt.set)))
            fail(outcomes[t], "identity failed at trial " + std::to_string(t));
    });
    Rational worst(1);
    int suboptimal = 0;
    for (auto [a, b] : ratios) {
        worst = std::min(worst, Rational(a, b));
        if (a < b) ++suboptimal;
    }
    SuiteResult r;
    r.checks.push_back(
        fold_trials("interval floor: worst-case ratio at least 2/3 on random interval (n<=" +
                        std::to_string(nmax) + ")",
                    outcomes, "min ratio " + to_string(worst) + ", greedy suboptimal on " +
                                  std::to_string(suboptimal) + " instances"));
    return r;
}

SuiteResult verify_identity_fuzz(int trials, int nmax, std::uint64_t seed) {
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, [&](int t) {
        SplitMix64 rng(seed + t);
        int n = 2 + static_cast<int>(rng.below(nmax - 1));
        Graph g;
        switch (t % 4) {
        case 0: g = random_general_graph(n, 20 + static_cast<unsigned>(rng.below(50)), rng); break;
        case 1: g = random_interval(n, rng.next()).graph; break;
        case 2: g = random_chordal(n, rng.next()).graph; break;
        default: g = random_paths_cycles(n, rng.next()).graph; break;
        }
        TieBreakPolicy policy = TieBreakPolicy::first_label();
        if (t % 3 == 1) policy = TieBreakPolicy::seeded_random(rng.next());
        if (t % 3 == 2) policy = TieBreakPolicy::simplicial_first();
        GreedyTrace trace = greedy_run(g, policy);
        VertexList ref = random_independent_set(g, rng);
        if (!check_identity(classify(g, trace, ref)))
            fail(outcomes[t], "trial " + std::to_string(t) + " (n=" + std::to_string(n) + ")");
    });
    SuiteResult r;
    r.checks.push_back(fold_trials(
        "Eq.(1) identity on random (graph, trace, independent set) triples", outcomes));
    return r;
}

SuiteResult verify_lemma_fuzz(int trials, int nmax, std::uint64_t seed, int exhaustive_limit) {
    std::vector<TrialOutcome> outcomes(trials);
    std::vector<int> expensive_runs(trials, 0);
    parallel_for(trials, [&](int t) {
        SplitMix64 rng(seed + t);
        int parts = 1 + static_cast<int>(rng.below(3));
        std::vector<Graph> pieces;
        for (int i = 0; i < parts; ++i) {
            int n = 1 + static_cast<int>(rng.below(std::max(1, nmax / parts)));
            pieces.push_back(parts == 1 ? random_connected_chordal_mixed(n, rng)
                                        : random_chordal(n, rng.next()).graph);
        }
        Graph g = disjoint_union(pieces);
        std::vector<GreedyTrace> traces;
        traces.push_back(adversarial_value(g, exhaustive_limit).second);
        traces.push_back(greedy_run(g, TieBreakPolicy::first_label()));
        traces.push_back(greedy_run(g, TieBreakPolicy::seeded_random(rng.next())));
        std::vector<VertexList> refs = {mis_chordal(g).set, random_independent_set(g, rng)};
        for (const GreedyTrace& trace : traces)
            for (const VertexList& ref : refs) {
                MoveLedger ledger = classify(g, trace, ref);
                if (max_j_observed(ledger) >= 2) ++expensive_runs[t];
                if (!check_identity(ledger)) fail(outcomes[t], "identity, trial " + std::to_string(t));
                if (!check_disconnection(g, ledger))
                    fail(outcomes[t], "disconnection, trial " + std::to_string(t));
                if (!check_component_floor(g, ledger))
                    fail(outcomes[t], "component floor, trial " + std::to_string(t));
                bool charging = g.component_count() == 1 ? check_charging_bound(g, ledger)
                                                         : check_charging_bound_per_component(g, ledger);
                if (!charging) fail(outcomes[t], "charging bound, trial " + std::to_string(t));
            }
    });
    int with_expensive = 0;
    for (int c : expensive_runs) with_expensive += (c > 0);
    SuiteResult r;
    r.checks.push_back(fold_trials(
        "lemma fuzz: disconnection, component floor, charging bound on chordal runs", outcomes,
        "j>=2 moves exercised on " + std::to_string(with_expensive) + " instances"));
    return r;
}

SuiteResult verify_interval_cutoff(int trials, int nmax, std::uint64_t seed, int exhaustive_limit) {
    std::vector<TrialOutcome> outcomes(trials);
    std::vector<int> saw_two_move(trials, 0);
    parallel_for(trials, [&](int t) {
        SplitMix64 rng(seed + t);
        int n = 3 + static_cast<int>(rng.below(nmax - 2));
        IntervalRepresentation rep = random_interval_rep_mixed(n, rng);
        Graph g = graph_from_intervals(rep);
        PackedGraph pg(g);
        std::vector<std::uint64_t> max_sets = all_maximum_independent_sets_packed(pg);
        for (std::uint64_t packed : max_sets) {
            int maxj = max_j_all_executions(pg, packed);
            if (maxj == 2) saw_two_move[t] = 1;
            if (maxj > 2) {
                fail(outcomes[t], "j>=3 reachable, trial " + std::to_string(t));
                return;
            }
        }
        // Also exercise the official classification path on witness traces.
        std::vector<GreedyTrace> traces;
        traces.push_back(adversarial_value(g, exhaustive_limit).second);
        traces.push_back(benevolent_value(g, exhaustive_limit).second);
        traces.push_back(greedy_run(g, TieBreakPolicy::first_label()));
        for (std::uint64_t packed : max_sets) {
            VertexList ref;
            for (std::size_t i = 0; i < pg.labels.size(); ++i)
                if (packed >> i & 1) ref.push_back(pg.labels[i]);
            for (const GreedyTrace& trace : traces)
                if (max_j_observed(classify(g, trace, ref)) > 2) {
                    fail(outcomes[t], "ledger cutoff, trial " + std::to_string(t));
                    return;
                }
        }
    });
    int with_two_moves = 0;
    for (int c : saw_two_move) with_two_moves += c;
    SuiteResult r;
    r.checks.push_back(fold_trials(
        "interval cutoff: no j-move with j>=3 against any maximum set, over all executions",
        outcomes, "2-moves reachable on " + std::to_string(with_two_moves) + " instances"));
    return r;
}

SuiteResult verify_leafage(int trials, int nmax, std::uint64_t seed, int exhaustive_limit) {
    std::vector<TrialOutcome> outcomes(trials);
    std::vector<int> leafages(trials, 0);
    std::vector<int> suboptimal(trials, 0);
    parallel_for(trials, [&](int t) {
        SplitMix64 rng(seed + t);
        int n = 2 + static_cast<int>(rng.below(nmax - 1));
        Graph g = random_connected_chordal_mixed(n, rng);
        int leafage = leafage_small(g);
        leafages[t] = leafage;
        auto [adv, witness] = adversarial_value(g, exhaustive_limit);
        int opt = mis_chordal(g).size;
        suboptimal[t] = adv < opt;
        if (!(Rational(adv, opt) >= leafage_ratio_bound(leafage)))
            fail(outcomes[t], "trial " + std::to_string(t) + ": ratio " + ratio_str(adv, opt) +
                                  " below bound for leafage " + std::to_string(leafage));
    });
    int max_leafage = 0, sub_count = 0;
    for (int l : leafages) max_leafage = std::max(max_leafage, l);
    for (int s : suboptimal) sub_count += s;
    SuiteResult r;
    r.checks.push_back(fold_trials(
        "leafage bound: worst-case ratio at least 1-(l-1)/(2l-1) on chordal with <=" +
            std::to_string(nmax) + " cliques",
        outcomes, "max leafage seen " + std::to_string(max_leafage) + ", greedy suboptimal on " +
                      std::to_string(sub_count) + " instances"));
    return r;
}

SuiteResult verify_deg2_optimal(int trials, int nmax, std::uint64_t seed, int exhaustive_limit) {
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, [&](int t) {
        SplitMix64 rng(seed + t);
        int n = 1 + static_cast<int>(rng.below(nmax));
        FamilyInstance inst = random_paths_cycles(n, rng.next());
        int adv = adversarial_value(inst.graph, exhaustive_limit).first;
        int opt = mis_bruteforce(inst.graph).size;
        if (adv != opt)
            fail(outcomes[t], "trial " + std::to_string(t) + ": greedy " + std::to_string(adv) +
                                  " vs optimum " + std::to_string(opt));
    });
    SuiteResult r;
    r.checks.push_back(fold_trials(
        "max degree <= 2: worst-case greedy equals the optimum on paths and cycles", outcomes));
    return r;
}

SuiteResult verify_oracle(int trials, int nmax, std::uint64_t seed) {
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, [&](int t) {
        SplitMix64 rng(seed + t);
        int n = 1 + static_cast<int>(rng.below(nmax));
        FamilyInstance inst = random_chordal(n, rng.next());
        MISResult simplicial = mis_chordal(inst.graph);
        MISResult exact = mis_bruteforce(inst.graph);
        if (simplicial.size != exact.size || !inst.graph.is_independent_set(simplicial.set))
            fail(outcomes[t], "trial " + std::to_string(t) + ": " + std::to_string(simplicial.size) +
                                  " vs " + std::to_string(exact.size));
    });
    SuiteResult r;
    r.checks.push_back(fold_trials(
        "oracle equivalence: simplicial elimination equals branch and bound on chordal", outcomes));
    return r;
}

SuiteResult verify_advice(int trials, std::uint64_t seed) {
    std::vector<TrialOutcome> outcomes;
    int attempts = 0;
    const int max_attempts = trials * 2000;
    while (static_cast<int>(outcomes.size()) < trials && attempts < max_attempts) {
        SplitMix64 rng(seed + attempts);
        int n = 3 + (attempts % 6);
        ++attempts;
        FamilyInstance inst = random_interval(n, rng.next());
        if (inst.graph.max_degree() > 3) continue;
        TrialOutcome out;
        int greedy = static_cast<int>(
            greedy_run(inst.graph, TieBreakPolicy::simplicial_first()).solution.size());
        int opt = mis_chordal(inst.graph).size;
        if (greedy != opt)
            fail(out, "attempt " + std::to_string(attempts - 1) + ": simplicial-first " +
                          std::to_string(greedy) + " vs optimum " + std::to_string(opt));
        outcomes.push_back(out);
    }
    SuiteResult r;
    if (static_cast<int>(outcomes.size()) < trials) {
        r.add("advice: simplicial-first is optimal on interval graphs with max degree <= 3", false,
              "could not collect enough max-degree-3 instances");
        return r;
    }
    r.checks.push_back(fold_trials(
        "advice: simplicial-first is optimal on interval graphs with max degree <= 3", outcomes));
    return r;
}

RunReport build_run_report(const FamilyInstance& inst, const TieBreakPolicy& policy,
                           int exhaustive_limit) {
    const Graph& g = inst.graph;
    RunReport report;
    json& j = report.data;
    j["schema_version"] = 1;
    j["instance"] = {{"family", inst.family},
                     {"parameter", inst.parameter},
                     {"n", g.label_count()},
                     {"edges", g.edge_list().size()}};
    if (inst.seed) j["instance"]["seed"] = *inst.seed;
    const bool chordal = is_chordal(g);
    j["instance"]["chordal"] = chordal;
    j["instance"]["has_interval_representation"] = inst.representation.has_value();

    GreedyTrace trace = greedy_run(g, policy, exhaustive_limit);
    const int greedy_size = static_cast<int>(trace.solution.size());

    MISResult opt;
    std::string opt_method;
    if (chordal) {
        opt = mis_chordal(g);
        opt_method = to_string(opt.method);
    } else if (g.present_count() <= kDefaultBruteforceLimit) {
        opt = mis_bruteforce(g);
        opt_method = to_string(opt.method);
    } else if (!inst.optimum_certificate.empty() && inst.expected_opt) {
        opt.set = inst.optimum_certificate;
        opt.size = *inst.expected_opt;
        opt_method = "certificate";
    } else {
        throw SizeLimitError("no exact optimum available for this instance size");
    }
    j["optimum"] = {{"size", opt.size}, {"set", opt.set}, {"method", opt_method}};

    const VertexList& reference =
        inst.optimum_certificate.empty() ? opt.set : inst.optimum_certificate;
    MoveLedger ledger = classify(g, trace, reference);

    json checks;
    checks["trace_valid"] = validate_trace(g, trace);
    checks["identity"] = check_identity(ledger);
    if (chordal) {
        checks["disconnection"] = check_disconnection(g, ledger);
        checks["component_floor"] = check_component_floor(g, ledger);
        if (g.component_count() == 1)
            checks["charging_bound"] = check_charging_bound(g, ledger);
        else
            checks["charging_bound_componentwise"] = check_charging_bound_per_component(g, ledger);
    }
    if (inst.representation) checks["interval_move_cutoff"] = max_j_observed(ledger) <= 2;

    json bounds;
    Rational eq4 = ratio_bound_from_counts(ledger.counts);
    bounds["ratio_lower_bound"] = {{"num", eq4.numerator()},
                                   {"den", eq4.denominator()},
                                   {"decimal", to_double(eq4)}};
    if (opt.size > 0) {
        Rational ratio(greedy_size, opt.size);
        j["ratio"] = {{"num", ratio.numerator()},
                      {"den", ratio.denominator()},
                      {"decimal", to_double(ratio)}};
        if (chordal && g.component_count() == 1) {
            checks["ratio_at_least_move_bound"] = ratio >= eq4;
            try {
                int leafage = leafage_small(g);
                Rational lb = leafage_ratio_bound(leafage);
                bounds["leafage"] = leafage;
                bounds["leafage_bound"] = {{"num", lb.numerator()},
                                           {"den", lb.denominator()},
                                           {"decimal", to_double(lb)}};
                checks["ratio_at_least_leafage_bound"] = ratio >= lb;
            } catch (const SizeLimitError&) {
                // too many cliques to enumerate clique trees; bound omitted
            }
        }
    }
    j["bounds"] = bounds;

    json sizes;
    j["policy"] = policy.name();
    sizes[policy.name()] = greedy_size;
    sizes["first-label"] = greedy_run(g, TieBreakPolicy::first_label()).solution.size();
    sizes["simplicial-first"] = greedy_run(g, TieBreakPolicy::simplicial_first()).solution.size();
    if (g.present_count() <= exhaustive_limit) {
        sizes["adversarial"] = adversarial_value(g, exhaustive_limit).first;
        sizes["benevolent"] = benevolent_value(g, exhaustive_limit).first;
    }
    j["greedy_sizes"] = sizes;
    j["greedy_size"] = greedy_size;
    j["trace"] = trace_to_json(trace);
    j["ledger"] = ledger_to_json(ledger);

    bool all = true;
    for (const auto& [name, value] : checks.items()) all = all && value.get<bool>();
    j["checks"] = checks;
    j["pass"] = all;
    report.all_checks_pass = all;
    return report;
}

std::string sweep_csv(const std::string& family, int kmin, int kmax) {
    if (kmin > kmax) throw InvalidParameterError("sweep requires kmin <= kmax");
    FamilyInstance (*make)(int) = nullptr;
    if (family == "interval-tight")
        make = interval_tight;
    else if (family == "chordal-tight")
        make = chordal_tight;
    else if (family == "permutation")
        make = permutation_family;
    else if (family == "two-track")
        make = two_track_family;
    else
        throw InvalidParameterError("unknown sweep family: " + family);
    std::string csv =
        "k,n,max_degree,greedy,opt,ratio_num,ratio_den,ratio_decimal,bound_num,bound_den,bound_"
        "decimal\n";
    std::vector<std::string> rows(kmax - kmin + 1);
    parallel_for(kmax - kmin + 1, [&](int idx) {
        int k = kmin + idx;
        FamilyInstance inst = make(k);
        GreedyTrace trace = greedy_run(inst.graph, TieBreakPolicy::scripted(inst.adversarial_script));
        int greedy = static_cast<int>(trace.solution.size());
        int opt = *inst.expected_opt;
        MoveLedger ledger = classify(inst.graph, trace, inst.optimum_certificate);
        Rational ratio(greedy, opt);
        Rational bound = ratio_bound_from_counts(ledger.counts);
        rows[idx] = std::to_string(k) + "," + std::to_string(inst.graph.label_count()) + "," +
                    std::to_string(inst.graph.max_degree()) + "," + std::to_string(greedy) + "," +
                    std::to_string(opt) + "," + std::to_string(ratio.numerator()) + "," +
                    std::to_string(ratio.denominator()) + "," + decimal_str(ratio) + "," +
                    std::to_string(bound.numerator()) + "," + std::to_string(bound.denominator()) +
                    "," + decimal_str(bound) + "\n";
    });
    for (const std::string& row : rows) csv += row;
    return csv;
}

} // namespace mingreedy
