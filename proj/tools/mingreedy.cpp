#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "mingreedy/families.hpp"
#include "mingreedy/greedy.hpp"
#include "mingreedy/io.hpp"
#include "mingreedy/mis.hpp"
#include "mingreedy/verify.hpp"

namespace fs = std::filesystem;
using namespace mingreedy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeLimit = 3;

FamilyInstance make_instance(const std::string& family, long long param,
                             std::optional<std::uint64_t> seed) {
    const int p = static_cast<int>(param);
    if (family == "interval-tight") return interval_tight(p);
    if (family == "chordal-tight") return chordal_tight(p);
    if (family == "permutation") return permutation_family(p);
    if (family == "two-track") return two_track_family(p);
    std::uint64_t s = seed.value_or(0);
    if (family == "random-interval") return random_interval(p, s);
    if (family == "random-chordal") return random_chordal(p, s);
    if (family == "random-paths-cycles") return random_paths_cycles(p, s);
    throw InvalidParameterError("unknown family: " + family);
}

TieBreakPolicy make_policy(const std::string& tag, const FamilyInstance& inst,
                           std::uint64_t seed) {
    if (tag == "auto")
        return inst.adversarial_script.empty() ? TieBreakPolicy::first_label()
                                               : TieBreakPolicy::scripted(inst.adversarial_script);
    if (tag == "first-label") return TieBreakPolicy::first_label();
    if (tag == "scripted") {
        if (inst.adversarial_script.empty())
            throw InvalidParameterError("instance directory has no script.txt");
        return TieBreakPolicy::scripted(inst.adversarial_script);
    }
    if (tag == "random") return TieBreakPolicy::seeded_random(seed);
    if (tag == "simplicial-first") return TieBreakPolicy::simplicial_first();
    if (tag == "adversarial") return TieBreakPolicy::adversarial();
    if (tag == "benevolent") return TieBreakPolicy::benevolent();
    throw InvalidParameterError("unknown policy: " + tag);
}

void print_suite(const SuiteResult& suite) {
    for (const CheckResult& c : suite.checks)
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                  << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InvalidInputError("cannot write " + out_path);
    out << content;
}

int pick(int flag_value, int suite_default) { return flag_value > 0 ? flag_value : suite_default; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-degree greedy for maximum independent set on interval and chordal "
                 "graphs: instance generators, exact solvers, and verification suites"};
    app.require_subcommand(1);

    std::string family, instance_dir, policy_tag = "auto", suite, out_path;
    long long param = 0;
    std::optional<std::uint64_t> seed_opt;
    std::uint64_t seed = 1;
    int limit = kDefaultExhaustiveLimit;
    int kmax = 20, kmin = -1, nmax = -1, trials = -1;

    CLI::App* gen = app.add_subcommand("generate", "construct an instance directory");
    gen->add_option("family", family,
                    "interval-tight | chordal-tight | permutation | two-track | random-interval | "
                    "random-chordal | random-paths-cycles")
        ->required();
    gen->add_option("parameter", param, "k for named families, n for random ones")->required();
    gen->add_option("--seed", seed_opt, "seed for random families");
    gen->add_option("--out", out_path, "output directory (default <family>-<parameter>)");

    CLI::App* run = app.add_subcommand("run", "run greedy on an instance and report all checks");
    run->add_option("instance", instance_dir, "instance directory")->required();
    run->add_option("--policy", policy_tag,
                    "auto | first-label | scripted | random | simplicial-first | adversarial | "
                    "benevolent");
    run->add_option("--seed", seed, "seed for the random policy");
    run->add_option("--limit", limit, "exhaustive search vertex limit");
    run->add_option("--out", out_path, "write the JSON report here instead of stdout");

    CLI::App* solve = app.add_subcommand("solve", "exact maximum independent set of an instance");
    solve->add_option("instance", instance_dir, "instance directory")->required();
    solve->add_option("--limit", limit, "branch-and-bound vertex limit");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "tight-families | chordal-floor | interval-floor | ledger-fuzz | "
                       "interval-cutoff | leafage | deg2 | oracle | advice | all")
        ->required();
    verify->add_option("--kmax", kmax, "largest family parameter");
    verify->add_option("--n", nmax, "largest instance size");
    verify->add_option("--trials", trials, "number of random instances");
    verify->add_option("--seed", seed, "base seed");
    verify->add_option("--limit", limit, "exhaustive search vertex limit");

    CLI::App* sweep = app.add_subcommand("sweep", "CSV ratio table over a family parameter range");
    sweep->add_option("family", family, "interval-tight | chordal-tight | permutation | two-track")
        ->required();
    sweep->add_option("--kmin", kmin, "first k (default: smallest valid)");
    sweep->add_option("--kmax", kmax, "last k");
    sweep->add_option("--out", out_path, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            FamilyInstance inst = make_instance(family, param, seed_opt);
            fs::path dir = out_path.empty() ? fs::path(family + "-" + std::to_string(param))
                                            : fs::path(out_path);
            write_instance_dir(dir, inst);
            std::cout << "wrote " << dir.string() << " (n=" << inst.graph.label_count() << ")\n";
            return kExitOk;
        }
        if (run->parsed()) {
            FamilyInstance inst = read_instance_dir(instance_dir);
            TieBreakPolicy policy = make_policy(policy_tag, inst, seed);
            RunReport report = build_run_report(inst, policy, limit);
            write_output(out_path, report.data.dump(2) + "\n");
            return report.all_checks_pass ? kExitOk : kExitCheckFailure;
        }
        if (solve->parsed()) {
            FamilyInstance inst = read_instance_dir(instance_dir);
            MISResult res = is_chordal(inst.graph) ? mis_chordal(inst.graph)
                                                   : mis_bruteforce(inst.graph, limit);
            json out = {{"size", res.size}, {"set", res.set}, {"method", to_string(res.method)}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            SuiteResult result;
            if (suite == "tight-families") {
                result = verify_tight_families(kmax, limit);
            } else if (suite == "chordal-floor") {
                result = verify_chordal_floor(pick(trials, 500), pick(nmax, 16), seed, limit);
            } else if (suite == "interval-floor") {
                result = verify_interval_floor(pick(trials, 500), pick(nmax, 16), seed, limit);
            } else if (suite == "ledger-fuzz") {
                result = verify_identity_fuzz(pick(trials, 500), pick(nmax, 14), seed);
                result.merge(verify_lemma_fuzz(pick(trials, 500), pick(nmax, 16), seed, limit));
            } else if (suite == "interval-cutoff") {
                result = verify_interval_cutoff(pick(trials, 300), pick(nmax, 12), seed, limit);
            } else if (suite == "leafage") {
                result = verify_leafage(pick(trials, 100), pick(nmax, 10), seed, limit);
            } else if (suite == "deg2") {
                result = verify_deg2_optimal(pick(trials, 200), pick(nmax, 20), seed, limit);
            } else if (suite == "oracle") {
                result = verify_oracle(pick(trials, 300), pick(nmax, 18), seed);
            } else if (suite == "advice") {
                result = verify_advice(pick(trials, 100), seed);
            } else if (suite == "all") {
                result = verify_tight_families(kmax, limit);
                result.merge(verify_chordal_floor(pick(trials, 500), pick(nmax, 16), seed, limit));
                result.merge(verify_interval_floor(pick(trials, 500), pick(nmax, 16), seed, limit));
                result.merge(verify_identity_fuzz(pick(trials, 500), 14, seed));
                result.merge(verify_lemma_fuzz(pick(trials, 500), pick(nmax, 16), seed, limit));
                result.merge(verify_interval_cutoff(pick(trials, 300), 12, seed, limit));
                result.merge(verify_leafage(100, 10, seed, limit));
                result.merge(verify_deg2_optimal(200, 20, seed, limit));
                result.merge(verify_oracle(300, 18, seed));
                result.merge(verify_advice(100, seed));
            } else {
                throw InvalidParameterError("unknown suite: " + suite);
            }
            print_suite(result);
            bool pass = result.all_pass();
            std::cout << (pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
            return pass ? kExitOk : kExitCheckFailure;
        }
        if (sweep->parsed()) {
            int lo = kmin;
            if (lo <= 0) lo = family == "chordal-tight" ? 2 : (family == "interval-tight" ? 1 : 3);
            write_output(out_path, sweep_csv(family, lo, kmax));
            return kExitOk;
        }
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
