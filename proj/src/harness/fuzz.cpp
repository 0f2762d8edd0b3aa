#include <launchpad/arith.hpp>
#include <launchpad/harness/fuzz.hpp>
#include <launchpad/harness/generate.hpp>
#include <launchpad/harness/oracle.hpp>
#include <launchpad/harness/rng.hpp>

#include <algorithm>
#include <thread>

namespace launchpad::harness
{

using codec::Json;
using launchpad::to_string;

namespace
{
    struct CaseResult
    {
        std::uint64_t actions{0};
        std::uint64_t applied{0};
        std::uint64_t refunds{0};
        std::uint64_t samples{0};
        std::vector<InvariantViolation> violations;
        std::optional<Scenario> scenario; // kept only when failing
        std::string arithmetic_detail;
    };

    bool violates(Scenario const &scenario, std::string const &invariant)
    {
        auto const report = replay(scenario);
        return std::any_of(
            report.invariant_violations.begin(),
            report.invariant_violations.end(),
            [&](auto const &v) { return v.invariant == invariant; });
    }

    // mul_div_floor against the rational oracle, including the overflow
    // boundary: the implementation must signal overflow exactly when the
    // true quotient needs more than 128 bits.
    std::string check_arithmetic(Rng &rng, std::size_t samples, std::uint64_t &count)
    {
        for (std::size_t i = 0; i < samples; ++i) {
            Nat const x = rng.log_uniform_nat();
            Nat const y = rng.log_uniform_nat();
            Nat k = rng.log_uniform_nat();
            if (k == 0) {
                k = 1;
            }
            ++count;
            auto const expected = oracle::narrow(
                oracle::mul_div_floor(oracle::big(x), oracle::big(y), oracle::big(k)));
            std::optional<Nat> actual;
            try {
                actual = mul_div_floor(x, y, k);
            }
            catch (Error const &e) {
                if (e.kind() != ErrorKind::overflow) {
                    throw;
                }
            }
            if (actual != expected) {
                return "mul_div_floor(" + to_string(x) + ", " + to_string(y) +
                       ", " + to_string(k) + ") disagrees with oracle";
            }
        }
        return {};
    }

    CaseResult run_case(FuzzOptions const &options, std::uint64_t index)
    {
        Rng rng = Rng::for_case(options.seed, index);
        CaseResult result;
        Scenario scenario = random_scenario(rng, options.max_actions);
        auto const report = replay(scenario);

        result.actions = scenario.actions.size();
        for (auto const &o : report.outcomes) {
            result.applied += o.applied ? 1 : 0;
            result.refunds += o.deposit && o.deposit->refund > 0 ? 1 : 0;
        }
        result.violations = report.invariant_violations;
        result.arithmetic_detail =
            check_arithmetic(rng, options.arithmetic_samples, result.samples);
        if (!result.violations.empty()) {
            result.scenario = std::move(scenario);
        }
        return result;
    }
}

Scenario minimize(Scenario scenario, std::string const &invariant)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = scenario.actions.size(); i-- > 0;) {
            Scenario candidate = scenario;
            candidate.actions.erase(
                candidate.actions.begin() + static_cast<std::ptrdiff_t>(i));
            if (violates(candidate, invariant)) {
                scenario = std::move(candidate);
                changed = true;
            }
        }
    }

    for (std::size_t i = 0; i < scenario.actions.size(); ++i) {
        Nat lo = 1;
        Nat hi = scenario.actions[i].amount;
        if (hi <= 1) {
            continue;
        }
        while (lo < hi) {
            Nat const mid = lo + (hi - lo) / 2;
            Scenario candidate = scenario;
            candidate.actions[i].amount = mid;
            if (violates(candidate, invariant)) {
                hi = mid;
            }
            else {
                lo = mid + 1;
            }
        }
        Scenario candidate = scenario;
        candidate.actions[i].amount = hi;
        if (violates(candidate, invariant)) {
            scenario = std::move(candidate);
        }
    }
    return scenario;
}

FuzzSummary fuzz(FuzzOptions const &options)
{
    require(options.cases > 0, "fuzz needs at least one case");

    std::vector<CaseResult> results(options.cases);
    unsigned const jobs = std::max(1u, options.jobs);
    auto worker = [&](unsigned lane) {
        for (std::uint64_t i = lane; i < options.cases; i += jobs) {
            results[i] = run_case(options, i);
        }
    };
    if (jobs == 1) {
        worker(0);
    }
    else {
        std::vector<std::jthread> threads;
        for (unsigned lane = 0; lane < jobs; ++lane) {
            threads.emplace_back(worker, lane);
        }
    }

    FuzzSummary summary{.seed = options.seed, .cases = options.cases};
    for (std::uint64_t i = 0; i < options.cases; ++i) {
        auto &r = results[i];
        summary.actions += r.actions;
        summary.actions_applied += r.applied;
        summary.refunds += r.refunds;
        summary.arithmetic_samples += r.samples;
        for (auto const &v : r.violations) {
            ++summary.violations_by_invariant[v.invariant];
        }
        if (!r.arithmetic_detail.empty()) {
            ++summary.violations_by_invariant["mul_div_oracle"];
        }
        bool const failed = !r.violations.empty() || !r.arithmetic_detail.empty();
        if (!failed) {
            continue;
        }
        ++summary.failing_cases;
        if (summary.first_failure) {
            continue;
        }
        FuzzFailure failure{.case_index = i};
        if (!r.violations.empty()) {
            failure.invariant = r.violations.front().invariant;
            failure.minimized = minimize(*r.scenario, failure.invariant);
            failure.violations =
                replay(*failure.minimized).invariant_violations;
            failure.detail = r.violations.front().detail;
        }
        else {
            failure.invariant = "mul_div_oracle";
            failure.detail = r.arithmetic_detail;
        }
        summary.first_failure = std::move(failure);
    }
    return summary;
}

Json encode(FuzzSummary const &summary)
{
    Json by_invariant = Json::object();
    for (auto const &[name, count] : summary.violations_by_invariant) {
        by_invariant[name] = std::to_string(count);
    }
    Json out{
        {"seed", std::to_string(summary.seed)},
        {"cases", std::to_string(summary.cases)},
        {"actions", std::to_string(summary.actions)},
        {"actions_applied", std::to_string(summary.actions_applied)},
        {"refunds", std::to_string(summary.refunds)},
        {"arithmetic_samples", std::to_string(summary.arithmetic_samples)},
        {"failing_cases", std::to_string(summary.failing_cases)},
        {"violations_by_invariant", by_invariant},
        {"passed", summary.ok()},
    };
    if (summary.first_failure) {
        auto const &f = *summary.first_failure;
        Json failure{
            {"case_index", std::to_string(f.case_index)},
            {"invariant", f.invariant},
            {"detail", f.detail},
        };
        if (f.minimized) {
            failure["minimized_scenario"] = encode(*f.minimized);
            Json violations = Json::array();
            for (auto const &v : f.violations) {
                violations.push_back({
                    {"invariant", v.invariant},
                    {"action_index", v.action_index},
                    {"detail", v.detail},
                });
            }
            failure["violations"] = violations;
        }
        out["counterexample"] = failure;
    }
    return out;
}

} // namespace launchpad::harness
