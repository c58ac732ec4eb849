#pragma once

#include <vector>

#include "mingreedy/chordal.hpp"
#include "mingreedy/graph.hpp"
#include "mingreedy/rational.hpp"

namespace mingreedy {

/// Closed interval with exact rational endpoints. Touching endpoints count
/// as intersecting, and several constructions depend on that, so endpoints
/// are never floats.
struct Interval {
    Rational lo;
    Rational hi;
    bool intersects(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }
};

/// One closed interval per vertex label.
struct IntervalRepresentation {
    std::vector<Interval> intervals;
    int size() const { return static_cast<int>(intervals.size()); }
};

/// Intersection graph of the intervals: u ~ v iff the closed intervals meet.
/// Throws InvalidIntervalError if some interval has lo > hi.
Graph graph_from_intervals(const IntervalRepresentation& rep);

/// True iff all intervals have the same length (exact comparison).
bool is_unit(const IntervalRepresentation& rep);

/// Path-shaped clique decomposition from a left-to-right sweep: a maximal
/// clique forms at each point where an interval ends next; non-maximal
/// sweep bags are dropped. Bags appear in sweep order and consecutive bags
/// are joined, so the tree is a path.
TreeDecomposition clique_path(const IntervalRepresentation& rep);

/// True iff the intervals induce exactly the present edges of g (same label
/// count, edge-for-edge over present vertices).
bool validate_representation(const IntervalRepresentation& rep, const Graph& g);

} // namespace mingreedy
