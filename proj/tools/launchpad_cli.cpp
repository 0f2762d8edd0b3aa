// launchpad: scenario replay, randomized fuzzing and lemma trace reporting.
//
// Exit codes: 0 all checks pass, 1 invariant or property violation,
// 2 usage or parse error.

#include <launchpad/harness/fuzz.hpp>
#include <launchpad/harness/replay.hpp>
#include <launchpad/harness/scenario.hpp>
#include <launchpad/harness/trace.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace
{

using namespace launchpad;
using namespace launchpad::harness;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::string read_file(std::string const &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::parse, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(std::string const &path, std::string const &text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Error(ErrorKind::parse, "cannot write " + path);
    }
}

int run_replay(std::string const &scenario_path, std::string const &out, bool check)
{
    Scenario const scenario = load_scenario(read_file(scenario_path));
    ReplayReport const report = replay(scenario, {.check_invariants = check});
    write_output(out, codec::dump(encode(report)));
    for (auto const &v : report.invariant_violations) {
        std::cerr << "violation: " << v.invariant << " after action "
                  << v.action_index << ": " << v.detail << '\n';
    }
    return report.invariant_violations.empty() ? kPass : kViolation;
}

int run_fuzz(FuzzOptions const &options, std::string const &out)
{
    FuzzSummary const summary = fuzz(options);
    write_output(out, codec::dump(encode(summary)));
    if (summary.first_failure) {
        auto const &f = *summary.first_failure;
        std::cerr << "violation: " << f.invariant << " in case " << f.case_index
                  << ": " << f.detail << '\n';
    }
    return summary.ok() ? kPass : kViolation;
}

int run_trace(PropertyBudget const &budget, std::string const &out)
{
    TraceMatrix const matrix = build_trace_matrix(budget);
    write_output(out, codec::dump(encode(matrix)));
    for (auto const &r : matrix.results) {
        std::cerr << (r.passed() ? "pass " : "FAIL ") << r.name << " (" << r.cases
                  << " cases)";
        if (!r.passed()) {
            std::cerr << ": " << r.counterexample;
        }
        std::cerr << '\n';
    }
    for (auto const &row : matrix.rows) {
        if (row.checks.empty()) {
            std::cerr << "unmapped: " << row.lemma << '\n';
        }
    }
    return matrix.ok() ? kPass : kViolation;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Token sale launchpad model: replay, fuzz, trace-matrix"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string replay_out;
    bool check_invariants = false;
    auto *replay_cmd = app.add_subcommand("replay", "Replay a scenario and emit a JSON report");
    replay_cmd->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    replay_cmd->add_option("--out", replay_out, "Report path (default stdout)");
    replay_cmd->add_flag(
        "--check-invariants", check_invariants,
        "Evaluate the invariant suite after every action");

    FuzzOptions fuzz_options;
    std::string fuzz_out;
    auto *fuzz_cmd = app.add_subcommand("fuzz", "Random scenarios checked against the oracle");
    fuzz_cmd->add_option("--seed", fuzz_options.seed, "RNG seed")->required();
    fuzz_cmd->add_option("--cases", fuzz_options.cases, "Number of cases")
        ->required()
        ->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--jobs", fuzz_options.jobs, "Worker threads")
        ->check(CLI::Range(1u, 256u));
    fuzz_cmd->add_option("--max-actions", fuzz_options.max_actions, "Actions per scenario")
        ->check(CLI::Range(std::size_t{0}, std::size_t{10000}));
    fuzz_cmd->add_option("--out", fuzz_out, "Summary path (default stdout)");

    PropertyBudget budget;
    std::string trace_out;
    bool full = false;
    auto *trace_cmd = app.add_subcommand("trace-matrix", "Run every property check and map lemmas to them");
    trace_cmd->add_option("--out", trace_out, "Report path")->required();
    trace_cmd->add_option("--seed", budget.seed, "RNG seed");
    trace_cmd->add_option("--samples", budget.samples, "Random samples per check")
        ->check(CLI::PositiveNumber);
    trace_cmd->add_option("--sequences", budget.sequences, "Random sequences per check")
        ->check(CLI::PositiveNumber);
    trace_cmd->add_flag("--full", full, "Run the acceptance-sized exhaustive grids");

    try {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const &e) {
        int const code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*replay_cmd) {
            return run_replay(scenario_path, replay_out, check_invariants);
        }
        if (*fuzz_cmd) {
            return run_fuzz(fuzz_options, fuzz_out);
        }
        budget.full_grids = full;
        return run_trace(budget, trace_out);
    }
    catch (Error const &e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::parse || e.kind() == ErrorKind::precondition_violation
                   ? kUsage
                   : kViolation;
    }
}
