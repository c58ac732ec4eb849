#include "mingreedy/ledger.hpp"

#include <algorithm>

#include "mingreedy/chordal.hpp"

namespace mingreedy {

MoveLedger classify(const Graph& g, const GreedyTrace& t, const VertexList& i) {
    if (!g.is_independent_set(i))
        throw InvalidInputError("reference set is not an independent set");
    if (!validate_trace(g, t)) throw InvalidInputError("trace does not replay on this graph");
    MoveLedger ledger;
    ledger.reference_set = i;
    Bits remaining = to_mask(g.label_count(), i);
    Graph cur = g;
    for (const GreedyPick& pick : t.picks) {
        Bits closed = cur.closed_neighbor_mask(pick.vertex);
        int j = static_cast<int>((closed & remaining).count());
        remaining -= closed;
        ledger.records.push_back({pick.vertex, j, pick.components_before, pick.components_after});
        if (j >= static_cast<int>(ledger.counts.size())) ledger.counts.resize(j + 1, 0);
        ++ledger.counts[j];
        cur = cur.without_closed_neighborhood(pick.vertex);
    }
    return ledger;
}

bool check_identity(const MoveLedger& l) {
    long long sum = 0;
    for (const MoveRecord& r : l.records) sum += r.j;
    return sum == static_cast<long long>(l.reference_set.size());
}

bool check_disconnection(const Graph& g, const MoveLedger& l) {
    if (!is_chordal(g)) throw ClassViolationError("disconnection check requires a chordal graph");
    for (const MoveRecord& r : l.records)
        if (r.j >= 2 && r.components_after < r.components_before + (r.j - 1)) return false;
    return true;
}

bool check_component_floor(const Graph& g, const MoveLedger& l) {
    return l.moves(0) + l.moves(1) >= g.component_count();
}

namespace {

bool charging_holds(long long m01, const std::vector<long long>& counts) {
    long long debt = 0;
    for (int j = 2; j < static_cast<int>(counts.size()); ++j) debt += (j - 1) * counts[j];
    return m01 >= 1 + debt;
}

} // namespace

bool check_charging_bound(const Graph& g, const MoveLedger& l) {
    if (g.component_count() != 1)
        throw InvalidInputError("charging bound is per component; graph is not connected");
    return charging_holds(l.moves(0) + l.moves(1), l.counts);
}

bool check_charging_bound_per_component(const Graph& g, const MoveLedger& l) {
    for (const Bits& comp : g.component_masks()) {
        std::vector<long long> counts;
        for (const MoveRecord& r : l.records) {
            if (!comp.test(r.vertex)) continue;
            if (r.j >= static_cast<int>(counts.size())) counts.resize(r.j + 1, 0);
            ++counts[r.j];
        }
        long long m01 = (counts.size() > 0 ? counts[0] : 0) + (counts.size() > 1 ? counts[1] : 0);
        if (!charging_holds(m01, counts)) return false;
    }
    return true;
}

Rational ratio_bound_from_counts(const std::vector<long long>& counts) {
    long long debt = 0, weight = 0;
    for (int j = 2; j < static_cast<int>(counts.size()); ++j) {
        debt += (j - 1) * counts[j];
        weight += (2LL * j - 1) * counts[j];
    }
    return Rational(1) - Rational(debt, 1 + weight);
}

Rational leafage_ratio_bound(int leafage) {
    if (leafage < 1) throw InvalidInputError("leafage must be at least 1");
    return Rational(1) - Rational(leafage - 1, 2 * leafage - 1);
}

int max_j_observed(const MoveLedger& l) {
    for (int j = static_cast<int>(l.counts.size()) - 1; j >= 0; --j)
        if (l.counts[j] > 0) return j;
    return 0;
}

} // namespace mingreedy
