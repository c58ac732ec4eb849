#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mingreedy/families.hpp"
#include "mingreedy/greedy.hpp"

namespace mingreedy {

using nlohmann::json;

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(std::string name, bool pass, std::string detail = "");
    void merge(const SuiteResult& other);
};

// Each suite verifies one empirical claim end to end and reports aggregate
// pass/fail checks. All randomness is seeded per trial, so reruns with the
// same arguments reproduce exactly. Suites with exhaustive search take the
// exhaustive vertex limit explicitly.

/// Interval tight family: scripted greedy 2k+1 vs optimum 3k+1 for
/// k = 1..kmax; exhaustive search confirms the script is worst case for
/// k <= 3; Eq. (1) identity on every classified run.
SuiteResult verify_interval_tight_family(int kmax, int exhaustive_limit);

/// Chordal tight family: scripted greedy k+1 vs optimum 2k for k = 2..kmax;
/// exhaustive confirmation at k = 2, 3.
SuiteResult verify_chordal_tight_family(int kmax, int exhaustive_limit);

/// Permutation and 2-track families: worst case 2 vs optimum k and
/// maximum degree 2k-2 for k = 3..kmax.
SuiteResult verify_negative_families(int kmax, int exhaustive_limit);

/// All three tight/negative family suites together.
SuiteResult verify_tight_families(int kmax, int exhaustive_limit);

/// Random connected chordal graphs: worst-case greedy ratio strictly above
/// 1/2 (exact rational comparison).
SuiteResult verify_chordal_floor(int trials, int nmax, std::uint64_t seed, int exhaustive_limit);

/// Random interval graphs: worst-case ratio at least 2/3.
SuiteResult verify_interval_floor(int trials, int nmax, std::uint64_t seed, int exhaustive_limit);

/// Eq. (1) identity on random (graph, trace, independent set) triples drawn
/// from general, interval, chordal, and max-degree-2 graphs.
SuiteResult verify_identity_fuzz(int trials, int nmax, std::uint64_t seed);

/// Disconnection (Lemma 3 form), component floor, and charging bound on
/// random chordal graphs and forests, against maximum and arbitrary
/// reference sets.
SuiteResult verify_lemma_fuzz(int trials, int nmax, std::uint64_t seed, int exhaustive_limit);

/// Interval j-move cutoff: no execution makes a j-move with j >= 3 against
/// any maximum independent set (all executions enumerated by state search).
SuiteResult verify_interval_cutoff(int trials, int nmax, std::uint64_t seed, int exhaustive_limit);

/// Leafage bound: worst-case ratio at least 1 - (l-1)/(2l-1) on connected
/// chordal graphs with few maximal cliques.
SuiteResult verify_leafage(int trials, int nmax, std::uint64_t seed, int exhaustive_limit);

/// Max degree <= 2: worst-case greedy equals the optimum.
SuiteResult verify_deg2_optimal(int trials, int nmax, std::uint64_t seed, int exhaustive_limit);

/// Simplicial elimination equals branch and bound on random chordal graphs.
SuiteResult verify_oracle(int trials, int nmax, std::uint64_t seed);

/// On interval graphs with max degree <= 3, simplicial-first tie-breaking
/// reaches the optimum.
SuiteResult verify_advice(int trials, std::uint64_t seed);

/// Full report for one greedy run on an instance: sizes per policy, exact
/// optimum, exact ratio, move histogram, bound values, and pass/fail for
/// every applicable check.
struct RunReport {
    json data;
    bool all_checks_pass = false;
};

RunReport build_run_report(const FamilyInstance& inst, const TieBreakPolicy& policy,
                           int exhaustive_limit = kDefaultExhaustiveLimit);

/// Sweep table; one row per k with exact ratio and Eq.-(4)-style bound
/// columns. Throws InvalidParameterError for unknown families or bad
/// ranges.
std::string sweep_csv(const std::string& family, int kmin, int kmax);

} // namespace mingreedy
