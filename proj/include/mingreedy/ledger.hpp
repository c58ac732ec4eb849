#pragma once

#include <vector>

#include "mingreedy/graph.hpp"
#include "mingreedy/greedy.hpp"
#include "mingreedy/rational.hpp"

namespace mingreedy {

/// A greedy pick is a j-move with respect to a fixed independent set I when
/// its closed neighborhood contains exactly j members of I that survived
/// all earlier picks. 0- and 1-moves keep up with I; j >= 2 moves fall
/// behind but disconnect chordal graphs enough to pay the debt back.
struct MoveRecord {
    Vertex vertex = -1;
    int j = 0;
    int components_before = 0;
    int components_after = 0;
};

struct MoveLedger {
    VertexList reference_set;
    std::vector<MoveRecord> records;
    std::vector<long long> counts; ///< counts[j] = m_j; trailing entries may be zero

    long long moves(int j) const {
        return j < static_cast<int>(counts.size()) ? counts[j] : 0;
    }
};

/// Classify every pick of a valid trace against independent set `i`.
/// Throws InvalidInputError when `i` is not an independent set of g or the
/// trace does not replay on g.
MoveLedger classify(const Graph& g, const GreedyTrace& t, const VertexList& i);

/// Every member of the reference set is deleted in exactly one step, so the
/// per-step j values must sum to |I|.
bool check_identity(const MoveLedger& l);

/// For every j-move with j >= 2 the surviving graph must gain at least j-1
/// components. Holds on chordal graphs for arbitrary reference sets; throws
/// ClassViolationError on non-chordal input. Components are counted on the
/// surviving vertices; a j >= 2 move always leaves survivors (each deleted
/// reference vertex has a neighbor outside the pick's closed neighborhood),
/// so the count never compares against an emptied graph.
bool check_disconnection(const Graph& g, const MoveLedger& l);

/// m_0 + m_1 must be at least the number of connected components of the
/// original graph (any reference set).
bool check_component_floor(const Graph& g, const MoveLedger& l);

/// Charging bound for a connected chordal run:
/// m_0 + m_1 >= 1 + sum_{j>=2} (j-1) m_j. Throws InvalidInputError on a
/// disconnected graph; use the per-component variant there.
bool check_charging_bound(const Graph& g, const MoveLedger& l);

/// Applies the charging bound within each connected component of g
/// (the +1 term is per component).
bool check_charging_bound_per_component(const Graph& g, const MoveLedger& l);

/// Ratio lower bound from the move counts:
/// 1 - sum_{j>=2} (j-1) m_j / (1 + sum_{j>=2} (2j-1) m_j), exact.
Rational ratio_bound_from_counts(const std::vector<long long>& counts);

/// Leafage form of the bound: 1 - (l-1)/(2l-1). Throws InvalidInputError
/// for leafage < 1.
Rational leafage_ratio_bound(int leafage);

/// Largest j with m_j > 0; 0 for an empty ledger.
int max_j_observed(const MoveLedger& l);

} // namespace mingreedy
