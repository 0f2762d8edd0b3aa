// Acceptance suite: one pass/fail line per criterion, exit 1 if any fails.

#include <launchpad/codec.hpp>
#include <launchpad/harness/properties.hpp>

#include <CLI11.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace launchpad;
using namespace launchpad::harness;

namespace
{

struct Criterion
{
    int number;
    std::string title;
    bool passed;
    std::string detail;
};

PropertyBudget acceptance_budget()
{
    return {.seed = 0x5eed, .samples = 100'000, .sequences = 10'000, .full_grids = true};
}

/// Runs checks at the acceptance budget; fails on any violation or when the
/// combined wall time exceeds `limit_seconds` (0 = no limit).
Criterion run_checks(
    int number, std::string title, std::vector<std::string> const &names,
    double limit_seconds = 0)
{
    Criterion c{number, std::move(title), true, {}};
    double seconds = 0;
    std::uint64_t cases = 0;
    for (auto const &name : names) {
        auto const r = run_check(find_check(name), acceptance_budget());
        seconds += r.seconds;
        cases += r.cases;
        if (!r.passed()) {
            c.passed = false;
            c.detail += name + " failed (" + std::to_string(r.violations) +
                        " violations): " + r.counterexample + "; ";
        }
    }
    if (limit_seconds > 0 && seconds > limit_seconds) {
        c.passed = false;
        c.detail += "runtime over limit; ";
    }
    std::ostringstream info;
    info.precision(2);
    info << std::fixed << cases << " cases, " << seconds << " s";
    c.detail += info.str();
    return c;
}

std::string quote(std::string const &s)
{
    std::string out = "'";
    for (char ch : s) {
        out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    }
    return out + "'";
}

int run(std::vector<std::string> const &argv)
{
    std::string cmd;
    for (auto const &a : argv) {
        cmd += quote(a) + " ";
    }
    cmd += ">/dev/null 2>&1";
    int const status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(fs::path const &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Criterion mutation(std::string const &cli, std::string const &mutant, fs::path const &work)
{
    Criterion c{8, "mutation sensitivity (refund + 1 is caught by fuzz)", false, {}};
    fs::path const out = work / "mutant_fuzz.json";
    fs::path const control_out = work / "control_fuzz.json";
    std::vector<std::string> const args{"fuzz", "--seed", "1", "--cases", "10000", "--out"};

    auto with = [&](std::string const &bin, fs::path const &o) {
        auto v = args;
        v.insert(v.begin(), bin);
        v.push_back(o.string());
        return run(v);
    };

    int const control = with(cli, control_out);
    int const code = with(mutant, out);
    if (control != 0) {
        c.detail = "unmutated build failed the same fuzz run (exit " + std::to_string(control) + ")";
        return c;
    }
    if (code != 1) {
        c.detail = "mutant fuzz exit " + std::to_string(code) + ", expected 1";
        return c;
    }
    auto const report = codec::Json::parse(slurp(out));
    auto const &by = report.at("violations_by_invariant");
    if (!by.contains("refund_safety")) {
        c.detail = "mutant failed, but not on refund_safety";
        return c;
    }
    c.passed = true;
    c.detail = "refund_safety violated in " + by.at("refund_safety").get<std::string>() +
               " places; first at case " +
               report.at("counterexample").at("case_index").get<std::string>() +
               "; unmutated build clean";
    return c;
}

Criterion determinism(std::string const &cli, fs::path const &scenarios, fs::path const &work)
{
    Criterion c{9, "replay determinism (golden scenarios)", true, {}};
    std::vector<fs::path> files;
    for (auto const &entry : fs::directory_iterator(scenarios)) {
        if (entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        return {9, c.title, false, "no scenarios found in " + scenarios.string()};
    }
    for (auto const &f : files) {
        std::string const stem = f.stem().string();
        fs::path const a = work / (stem + ".run1.json");
        fs::path const b = work / (stem + ".run2.json");
        int const ra = run({cli, "replay", "--scenario", f.string(), "--check-invariants", "--out", a.string()});
        int const rb = run({cli, "replay", "--scenario", f.string(), "--check-invariants", "--out", b.string()});
        std::string const first = slurp(a);
        if (ra != rb || first.empty() || first != slurp(b)) {
            c.passed = false;
            c.detail += stem + " differs between runs; ";
            continue;
        }
        if (ra != 0) {
            c.passed = false;
            c.detail += stem + " reports invariant violations; ";
        }
        fs::path const golden = scenarios / "expected" / (stem + ".json");
        if (fs::exists(golden) && slurp(golden) != first) {
            c.passed = false;
            c.detail += stem + " differs from the checked-in report; ";
        }
    }
    c.detail += std::to_string(files.size()) + " scenarios";
    return c;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Acceptance criteria"};
    std::string cli;
    std::string mutant;
    std::string scenarios;
    std::string work = "acceptance_work";
    app.add_option("--cli", cli, "launchpad CLI binary")->required();
    app.add_option("--mutant", mutant, "CLI built with the refund mutation")->required();
    app.add_option("--scenarios", scenarios, "Golden scenario directory")->required();
    app.add_option("--work", work, "Scratch directory");
    CLI11_PARSE(app, argc, argv);
    fs::create_directories(work);

    std::vector<Criterion> results;
    auto report = [&](Criterion c) {
        std::cout << (c.passed ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.title
                  << ": " << c.detail << std::endl;
        results.push_back(std::move(c));
    };

    report(run_checks(
        1, "arithmetic lemmas (grid [0,64], 1e5 random samples each, < 60 s)",
        {"arith.mul_div_oracle", "arith.div_mul_bounds", "arith.div_maintains_gte",
         "arith.div_maintains_gt", "arith.mul_div_greater", "arith.mul_div_strictly_greater",
         "arith.mul_div_less", "arith.mul_div_strictly_less", "arith.div_lower_bound"},
        60));
    report(run_checks(
        2, "round-trip loss equation ([1,64]^3) and round-trip bound (1e5 samples)",
        {"assets.round_trip_loss_equation", "assets.round_trip_bounds"}));
    report(run_checks(
        3, "discount round trip a-1 <= O_S(W_S(a)) <= a (a in [1,1e4], 5 percentages)",
        {"config.composite_round_trip"}));
    report(run_checks(
        4, "refund safety and conservation (exhaustive sweep + 1e5 wide cases, < 5 min)",
        {"deposit.refund_safety"}, 300));
    report(run_checks(
        5, "vesting monotone and bounded (1e4 schedules x 1000 points)",
        {"claim.vesting_curve"}));
    report(run_checks(
        6, "distribution soundness/completeness/uniqueness (subsets to 6, random to 100)",
        {"distribution.filter"}));
    report(run_checks(
        7, "state machine exclusion, progression, terminality; ledger coherence (1e4 sequences)",
        {"launchpad.status_mutual_exclusion", "launchpad.status_time_forward",
         "launchpad.status_terminal", "launchpad.ledger_coherence"}));
    report(mutation(cli, mutant, work));
    report(determinism(cli, scenarios, work));

    auto const failed = std::count_if(
        results.begin(), results.end(), [](auto const &c) { return !c.passed; });
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
