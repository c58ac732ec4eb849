#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mingreedy/chordal.hpp"
#include "mingreedy/families.hpp"
#include "mingreedy/graph.hpp"
#include "mingreedy/greedy.hpp"
#include "mingreedy/interval.hpp"
#include "mingreedy/ledger.hpp"

namespace mingreedy {

using nlohmann::json;

/// Edge-list text format: first line "n m", then m lines "u v" with
/// 0 <= u < v < n. Blank lines and '#' comments are ignored. Malformed
/// input throws InvalidInputError.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Interval file: JSON array of {label, lo_num, lo_den, hi_num, hi_den}.
IntervalRepresentation intervals_from_json(const json& j);
json intervals_to_json(const IntervalRepresentation& rep);

json tree_decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition tree_decomposition_from_json(const json& j);

json trace_to_json(const GreedyTrace& t);
GreedyTrace trace_from_json(const json& j);

json ledger_to_json(const MoveLedger& l);

/// Instance directory layout: edges.txt, meta.json, and (when present)
/// intervals.json or intervals_track1.json/intervals_track2.json,
/// script.txt, certificate.txt.
void write_instance_dir(const std::filesystem::path& dir, const FamilyInstance& inst);
FamilyInstance read_instance_dir(const std::filesystem::path& dir);

} // namespace mingreedy
