#include "mingreedy/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "mingreedy/chordal.hpp"
#include "mingreedy/greedy.hpp"
#include "mingreedy/mis.hpp"
#include "mingreedy/rng.hpp"

namespace mingreedy {

namespace {

void require_built(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("family construction invariant violated: " + what);
}

VertexList script_with_head(int n, const VertexList& head) {
    VertexList script = head;
    Bits used = to_mask(n, head);
    for (Vertex v = 0; v < n; ++v)
        if (!used.test(v)) script.push_back(v);
    return script;
}

void check_ground_truth(const FamilyInstance& inst) {
    const Graph& g = inst.graph;
    require_built(g.is_independent_set(inst.optimum_certificate), "certificate independence");
    require_built(static_cast<int>(inst.optimum_certificate.size()) == *inst.expected_opt,
                  "certificate size");
    GreedyTrace t = greedy_run(g, TieBreakPolicy::scripted(inst.adversarial_script));
    require_built(static_cast<int>(t.solution.size()) == *inst.expected_greedy,
                  "scripted greedy size");
}

Interval make_interval(long long lo_num, long long hi_num, long long den) {
    return {Rational(lo_num, den), Rational(hi_num, den)};
}

} // namespace

FamilyInstance interval_tight(int k) {
    if (k < 1) throw InvalidParameterError("interval_tight requires k >= 1");
    const int n = 6 * k + 3;
    // Block i starts at 28i (denominator 8); every interval has length 1.
    // Triangle: [0,8], [3,11], [5,13]. Path: [12,20], [14,22] (grey),
    // [21,29]. The next triangle starts at 28, overlapping only [21,29].
    IntervalRepresentation rep;
    rep.intervals.resize(n);
    for (int i = 0; i <= k; ++i) {
        long long t = 28LL * i;
        rep.intervals[6 * i + 0] = make_interval(t, t + 8, 8);
        rep.intervals[6 * i + 1] = make_interval(t + 3, t + 11, 8);
        rep.intervals[6 * i + 2] = make_interval(t + 5, t + 13, 8);
        if (i < k) {
            rep.intervals[6 * i + 3] = make_interval(t + 12, t + 20, 8);
            rep.intervals[6 * i + 4] = make_interval(t + 14, t + 22, 8);
            rep.intervals[6 * i + 5] = make_interval(t + 21, t + 29, 8);
        }
    }
    FamilyInstance inst;
    inst.graph = graph_from_intervals(rep);
    inst.representation = rep;
    inst.family = "interval-tight";
    inst.parameter = k;
    inst.expected_greedy = 2 * k + 1;
    inst.expected_opt = 3 * k + 1;
    VertexList greys;
    for (int i = 0; i < k; ++i) greys.push_back(6 * i + 4);
    inst.adversarial_script = script_with_head(n, greys);
    inst.optimum_certificate.push_back(0);
    for (int i = 0; i < k; ++i) {
        inst.optimum_certificate.push_back(6 * i + 3);
        inst.optimum_certificate.push_back(6 * i + 5);
        inst.optimum_certificate.push_back(6 * (i + 1) + 1);
    }
    std::sort(inst.optimum_certificate.begin(), inst.optimum_certificate.end());

    require_built(validate_representation(rep, inst.graph), "representation");
    require_built(is_unit(rep), "unit lengths");
    require_built(inst.graph.max_degree() == 3, "maximum degree 3");
    require_built(is_chordal(inst.graph), "chordality");
    require_built(mis_chordal(inst.graph).size == 3 * k + 1, "optimum size");
    check_ground_truth(inst);
    return inst;
}

FamilyInstance chordal_tight(int k) {
    if (k < 2) throw InvalidParameterError("chordal_tight requires k >= 2");
    const int n = k * (k + 2) + 1;
    std::vector<Edge> edges;
    VertexList certificate;
    for (int i = 0; i < k; ++i) {
        int base = 1 + i * (k + 2);
        int v = base, w = base + 1;
        for (int a = base; a < base + k + 2; ++a)
            for (int b = a + 1; b < base + k + 2; ++b)
                if (!(a == v && b == w)) edges.emplace_back(a, b);
        edges.emplace_back(0, v);
        certificate.push_back(v);
        certificate.push_back(w);
    }
    FamilyInstance inst;
    inst.graph = Graph(n, edges);
    inst.family = "chordal-tight";
    inst.parameter = k;
    inst.expected_greedy = k + 1;
    inst.expected_opt = 2 * k;
    inst.adversarial_script = script_with_head(n, {0});
    std::sort(certificate.begin(), certificate.end());
    inst.optimum_certificate = std::move(certificate);

    require_built(is_chordal(inst.graph), "chordality");
    require_built(inst.graph.degree(0) == k, "hub degree");
    for (int i = 0; i < k; ++i) {
        int base = 1 + i * (k + 2);
        require_built(inst.graph.degree(base) == k + 1, "v_i degree");
        require_built(inst.graph.degree(base + 1) == k, "w_i degree");
    }
    require_built(mis_chordal(inst.graph).size == 2 * k, "optimum size");
    check_ground_truth(inst);
    return inst;
}

FamilyInstance permutation_family(int k) {
    if (k < 3) throw InvalidParameterError("permutation_family requires k >= 3");
    const int n = 2 * k;
    // Permutation v_{k+1},...,v_{2k}, v_1, v_k, v_{k-1},...,v_2 over labels
    // 0..2k-1 (label i is v_{i+1}); i < j are adjacent iff j precedes i.
    std::vector<int> pos(n);
    int at = 0;
    for (int label = k; label < 2 * k; ++label) pos[label] = at++;
    pos[0] = at++;
    for (int label = k - 1; label >= 1; --label) pos[label] = at++;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pos[j] < pos[i]) edges.emplace_back(i, j);
    FamilyInstance inst;
    inst.graph = Graph(n, edges);
    inst.family = "permutation";
    inst.parameter = k;
    inst.expected_greedy = 2;
    inst.expected_opt = k;
    inst.adversarial_script = script_with_head(n, {0});
    for (int label = k; label < 2 * k; ++label) inst.optimum_certificate.push_back(label);

    require_built(inst.graph.max_degree() == 2 * k - 2, "maximum degree");
    require_built(inst.graph.degree(0) == k, "v_1 degree");
    if (n <= kDefaultBruteforceLimit)
        require_built(mis_bruteforce(inst.graph).size == k, "optimum size");
    check_ground_truth(inst);
    return inst;
}

FamilyInstance two_track_family(int k) {
    if (k < 3) throw InvalidParameterError("two_track_family requires k >= 3");
    const int n = 2 * k;
    // Labels: hub u_1 = 0, independent set I = 1..k, clique side X = k+1..2k-1.
    std::vector<Edge> track1, track2;
    for (int i = 1; i <= k; ++i) track1.emplace_back(0, i);
    for (int a = k + 1; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) track2.emplace_back(a, b);
        for (int i = 1; i <= k; ++i) track2.emplace_back(std::min(a, i), std::max(a, i));
    }
    IntervalRepresentation rep1, rep2;
    rep1.intervals.resize(n);
    rep2.intervals.resize(n);
    // Track 1: one long hub interval over k disjoint unit intervals; X far
    // to the right and pairwise disjoint.
    rep1.intervals[0] = make_interval(0, 3 * k, 1);
    for (int i = 1; i <= k; ++i) rep1.intervals[i] = make_interval(3 * i - 1, 3 * i, 1);
    for (int j = 1; j < k; ++j)
        rep1.intervals[k + j] = make_interval(3 * k + 2 * j, 3 * k + 2 * j + 1, 1);
    // Track 2: X as identical long intervals meeting every member of I; the
    // hub alone far to the right.
    rep2.intervals[0] = make_interval(5 * k, 5 * k + 1, 1);
    for (int i = 1; i <= k; ++i) rep2.intervals[i] = make_interval(3 * i - 1, 3 * i, 1);
    for (int j = 1; j < k; ++j) rep2.intervals[k + j] = make_interval(0, 3 * k + 1, 1);

    std::vector<Edge> edges = track1;
    edges.insert(edges.end(), track2.begin(), track2.end());
    FamilyInstance inst;
    inst.graph = Graph(n, edges);
    inst.track_representations = {rep1, rep2};
    inst.family = "two-track";
    inst.parameter = k;
    inst.expected_greedy = 2;
    inst.expected_opt = k;
    inst.adversarial_script = script_with_head(n, {0});
    for (int i = 1; i <= k; ++i) inst.optimum_certificate.push_back(i);

    require_built(validate_representation(rep1, Graph(n, track1)), "track 1 representation");
    require_built(validate_representation(rep2, Graph(n, track2)), "track 2 representation");
    require_built(inst.graph.degree(0) == k, "hub degree");
    require_built(inst.graph.max_degree() == 2 * k - 2, "maximum degree");
    if (n <= kDefaultBruteforceLimit)
        require_built(mis_bruteforce(inst.graph).size == k, "optimum size");
    check_ground_truth(inst);
    return inst;
}

FamilyInstance random_interval(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidParameterError("random_interval requires n >= 1");
    SplitMix64 rng(seed);
    IntervalRepresentation rep;
    const long long grid = 4LL * n;
    for (int v = 0; v < n; ++v) {
        long long a = static_cast<long long>(rng.below(grid + 1));
        long long b = static_cast<long long>(rng.below(grid + 1));
        rep.intervals.push_back(make_interval(std::min(a, b), std::max(a, b), 1));
    }
    FamilyInstance inst;
    inst.graph = graph_from_intervals(rep);
    inst.representation = std::move(rep);
    inst.family = "random-interval";
    inst.parameter = n;
    inst.seed = seed;
    return inst;
}

FamilyInstance random_chordal(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidParameterError("random_chordal requires n >= 1");
    SplitMix64 rng(seed);
    std::vector<Bits> adj(n, Bits(n));
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        // Grow a random clique inside the existing graph, then attach v to
        // all of it. The clique stays a clique because every added vertex is
        // a common neighbor of the ones already chosen.
        Vertex u = static_cast<Vertex>(rng.below(v));
        Bits clique(n);
        clique.set(u);
        Bits candidates = adj[u];
        while (candidates.any() && rng.chance(50)) {
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
    FamilyInstance inst;
    inst.graph = Graph(n, edges);
    inst.family = "random-chordal";
    inst.parameter = n;
    inst.seed = seed;
    return inst;
}

FamilyInstance random_paths_cycles(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidParameterError("random_paths_cycles requires n >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    int base = 0;
    while (base < n) {
        int remaining = n - base;
        int len = 1 + static_cast<int>(rng.below(std::min(remaining, 7)));
        bool cycle = len >= 3 && rng.chance(50);
        for (int i = 0; i + 1 < len; ++i) edges.emplace_back(base + i, base + i + 1);
        if (cycle) edges.emplace_back(base, base + len - 1);
        base += len;
    }
    FamilyInstance inst;
    inst.graph = Graph(n, edges);
    inst.family = "random-paths-cycles";
    inst.parameter = n;
    inst.seed = seed;
    return inst;
}

} // namespace mingreedy
