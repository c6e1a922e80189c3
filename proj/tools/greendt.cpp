#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "greendt/dt.hpp"
#include "greendt/errors.hpp"
#include "greendt/green.hpp"
#include "greendt/json_io.hpp"
#include "greendt/quiver.hpp"

namespace {

using namespace greendt;

// Exit codes: 0 ok / all comparisons equal, 1 some comparison unequal,
// 2 nondiscrete charge, 3 budget exceeded / infinite spectrum / partial
// enumeration, 4 malformed input.
constexpr int kExitUnequal = 1;
constexpr int kExitNondiscrete = 2;
constexpr int kExitBudget = 3;
constexpr int kExitBadInput = 4;

void print_run_human(const GreenRun& run) {
    std::printf("step  vertex  class  phase\n");
    for (size_t i = 0; i < run.steps.size(); ++i) {
        const GreenStep& s = run.steps[i];
        std::printf("%-5zu %-7d %s  %.6f\n", i + 1, s.vertex,
                    to_string(s.stable_class).c_str(), s.phase_display);
    }
    if (run.status == RunStatus::MaximalReached) {
        std::printf("status: maximal green sequence (%zu steps)\n", run.steps.size());
        std::string pi;
        for (int x : self_duality_check(run))
            pi += (pi.empty() ? "" : " ") + std::to_string(x);
        std::printf("permutation: %s\n", pi.c_str());
    } else {
        std::printf("status: budget exceeded after %zu steps\n", run.steps.size());
    }
}

int cmd_mutate(const std::string& quiver_path, const std::vector<int>& vertices) {
    Quiver q = quiver_from_json(load_json_file(quiver_path));
    for (int k : vertices)
        q = mutate(q, k);
    std::printf("%s\n", canonical_dump(quiver_to_json(q)).c_str());
    return 0;
}

int cmd_run(const std::string& quiver_path, const std::string& charge_path,
            long long budget, bool json_out) {
    const Quiver q = quiver_from_json(load_json_file(quiver_path));
    const CentralCharge z = charge_from_json(load_json_file(charge_path));
    const GreenRun run = run_mutation_method(q, z, budget);
    if (json_out)
        std::printf("%s\n", canonical_dump(run_to_json(run)).c_str());
    else
        print_run_human(run);
    return run.status == RunStatus::MaximalReached ? 0 : kExitBudget;
}

int cmd_dt(const std::string& quiver_path, const std::string& charge_path, int degree,
           long long budget, bool json_out) {
    const Quiver q = quiver_from_json(load_json_file(quiver_path));
    const CentralCharge z = charge_from_json(load_json_file(charge_path));
    const QSeries s = dt_invariant(q, z, degree, budget);
    if (json_out)
        std::printf("%s\n", canonical_dump(series_to_json(s)).c_str());
    else
        std::printf("%s\n", qs_print(s).c_str());
    return 0;
}

int cmd_check(const std::string& quiver_path, const std::vector<std::string>& charge_paths,
              int random_count, unsigned long long seed, int degree, long long budget,
              bool json_out) {
    const Quiver q = quiver_from_json(load_json_file(quiver_path));
    std::vector<CentralCharge> charges;
    for (const std::string& path : charge_paths)
        charges.push_back(charge_from_json(load_json_file(path)));
    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < random_count; ++i)
            charges.push_back(random_charge(q.size(), rng));
    }
    if (charges.size() < 2)
        throw InvalidInputError("check needs at least two charges "
                                "(charge files plus --random draws)");
    const IndependenceReport report = check_independence(q, charges, degree, budget);
    if (json_out) {
        std::printf("%s\n", canonical_dump(report_to_json(report)).c_str());
    } else {
        for (const ChargeResult& r : report.results) {
            const char* status = r.status == ChargeStatus::Ok          ? "ok"
                                 : r.status == ChargeStatus::Nondiscrete ? "nondiscrete"
                                                                         : "infinite";
            std::printf("charge %d: %s\n", r.charge_index, status);
        }
        for (const PairVerdict& v : report.comparisons)
            std::printf("compare %d %d: %s\n", v.i, v.j, v.equal ? "equal" : "unequal");
        std::printf("equal: %s\n", report.all_equal() ? "true" : "false");
    }
    return report.all_equal() ? 0 : kExitUnequal;
}

int cmd_enumerate(const std::string& quiver_path, int max_len, long long node_budget,
                  bool json_out) {
    const Quiver q = quiver_from_json(load_json_file(quiver_path));
    const MgsEnumeration e = enumerate_mgs(q, max_len, node_budget);
    if (json_out) {
        std::printf("%s\n", canonical_dump(mgs_to_json(e)).c_str());
    } else {
        for (const std::vector<int>& seq : e.sequences) {
            std::string line;
            for (int v : seq)
                line += (line.empty() ? "" : " ") + std::to_string(v);
            std::printf("%s\n", line.c_str());
        }
        std::printf("complete: %s\n", e.complete ? "true" : "false");
    }
    return e.complete ? 0 : kExitBudget;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"green-sequence engine for refined DT invariants"};
    app.require_subcommand(1);

    std::string quiver_path;
    std::string charge_path;
    std::vector<std::string> charge_paths;
    std::vector<int> vertices;
    int degree = 8;
    long long budget = 1000;
    int max_len = 64;
    long long node_budget = 1000000;
    int random_count = 0;
    unsigned long long seed = 12345;
    bool json_out = false;

    CLI::App* mutate = app.add_subcommand("mutate", "mutate a quiver at a vertex list");
    mutate->add_option("quiver", quiver_path, "quiver JSON file")->required();
    mutate->add_option("vertices", vertices, "vertices to mutate at, in order")
        ->required();

    CLI::App* run = app.add_subcommand("run", "run the mutation method");
    run->add_option("quiver", quiver_path, "quiver JSON file")->required();
    run->add_option("charge", charge_path, "central charge JSON file")->required();
    run->add_option("--budget", budget, "maximal number of mutation steps");
    run->add_flag("--json", json_out, "emit the transcript as JSON");

    CLI::App* dt = app.add_subcommand("dt", "compute the refined DT invariant");
    dt->add_option("quiver", quiver_path, "quiver JSON file")->required();
    dt->add_option("charge", charge_path, "central charge JSON file")->required();
    dt->add_option("--degree", degree, "series truncation degree");
    dt->add_option("--budget", budget, "maximal number of mutation steps");
    dt->add_flag("--json", json_out, "emit the series as JSON");

    CLI::App* check = app.add_subcommand("check", "compare DT invariants across charges");
    check->add_option("quiver", quiver_path, "quiver JSON file")->required();
    check->add_option("charges", charge_paths, "central charge JSON files");
    check->add_option("--random", random_count, "additionally draw N random charges");
    check->add_option("--seed", seed, "seed for --random draws");
    check->add_option("--degree", degree, "series truncation degree");
    check->add_option("--budget", budget, "maximal number of mutation steps");
    check->add_flag("--json", json_out, "emit the report as JSON");

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "enumerate maximal green sequences");
    enumerate->add_option("quiver", quiver_path, "quiver JSON file")->required();
    enumerate->add_option("--max-len", max_len, "maximal sequence length");
    enumerate->add_option("--node-budget", node_budget, "search node budget");
    enumerate->add_flag("--json", json_out, "emit the sequences as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (mutate->parsed())
            return cmd_mutate(quiver_path, vertices);
        if (run->parsed())
            return cmd_run(quiver_path, charge_path, budget, json_out);
        if (dt->parsed())
            return cmd_dt(quiver_path, charge_path, degree, budget, json_out);
        if (check->parsed())
            return cmd_check(quiver_path, charge_paths, random_count, seed, degree,
                             budget, json_out);
        return cmd_enumerate(quiver_path, max_len, node_budget, json_out);
    } catch (const NondiscreteChargeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNondiscrete;
    } catch (const InfiniteSpectrumError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBudget;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    }
}
