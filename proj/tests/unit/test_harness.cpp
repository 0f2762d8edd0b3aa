#include "support.hpp"

#include <launchpad/harness/fuzz.hpp>
#include <launchpad/harness/generate.hpp>
#include <launchpad/harness/replay.hpp>
#include <launchpad/harness/rng.hpp>
#include <launchpad/harness/scenario.hpp>
#include <launchpad/harness/trace.hpp>

#include <algorithm>

using namespace test;
using namespace launchpad::harness;

namespace
{
std::string const minimal = R"({
  "config": {
    "start_date": "100", "end_date": "200",
    "mechanic": {"type": "fixed_price", "deposit_token_amount": "1", "sale_token_amount": "1"},
    "sale_amount": "1000", "total_sale_amount": "1000", "soft_cap": "1",
    "discounts": [], "vesting": null,
    "distribution_proportions": {"solver_account": "solver", "stakeholder_proportions": []}
  },
  "actions": []
})";

ScenarioError::Reason reason_of(std::string const &text)
{
    try {
        (void)load_scenario(text);
    }
    catch (ScenarioError const &e) {
        return e.reason();
    }
    FAIL("scenario accepted");
    return ScenarioError::Reason::malformed;
}
} // namespace

TEST_CASE("rng is reproducible")
{
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        auto const v = c.uniform(3, 9);
        CHECK((v >= 3 && v <= 9));
        Nat const n = c.uniform_nat(5, kNatMax);
        CHECK(n >= 5);
    }
    CHECK(Rng::for_case(1, 2).next_u64() == Rng::for_case(1, 2).next_u64());
    CHECK(Rng::for_case(1, 2).next_u64() != Rng::for_case(1, 3).next_u64());
}

TEST_CASE("scenario loading")
{
    Scenario const s = load_scenario(minimal);
    CHECK(s.actions.empty());
    CHECK(s.is_sale_token_set);
    CHECK_FALSE(s.is_locked);

    std::string bad_dates = minimal;
    bad_dates.replace(bad_dates.find("\"200\""), 5, "\"100\"");
    CHECK(reason_of(bad_dates) == ScenarioError::Reason::invalid_config);
    try {
        (void)load_scenario(bad_dates);
    }
    catch (ScenarioError const &e) {
        CHECK(e.clauses() == std::vector<std::string>{"dates"});
    }

    std::string unsorted = minimal;
    unsorted.replace(
        unsorted.find("\"actions\": []"), 13,
        R"("actions": [{"time": "150", "kind": "distribute"}, {"time": "120", "kind": "distribute"}])");
    CHECK(reason_of(unsorted) == ScenarioError::Reason::unsorted_actions);
    CHECK(reason_of("{") == ScenarioError::Reason::malformed);
    CHECK(reason_of("[]") == ScenarioError::Reason::malformed);
}

TEST_CASE("scenario round trip")
{
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        Scenario const s = random_scenario(rng, 20);
        CHECK(decode_scenario(encode(s)) == s);
    }
}

TEST_CASE("replay records rejections without throwing")
{
    Scenario s = load_scenario(minimal);
    s.actions.push_back({.time = 50, .kind = ActionKind::deposit,
                         .account_id = AccountId("a"), .intent_account = IntentAccount("u"),
                         .amount = 5});
    s.actions.push_back({.time = 150, .kind = ActionKind::deposit,
                         .account_id = AccountId("a"), .intent_account = IntentAccount("u"),
                         .amount = 5});
    auto const report = replay(s);
    REQUIRE(report.outcomes.size() == 2);
    CHECK_FALSE(report.outcomes[0].applied);
    CHECK(report.outcomes[0].error_kind == ErrorKind::state_violation);
    CHECK(report.outcomes[1].applied);
    CHECK(report.final_state.total_deposited == 5);
    CHECK(report.invariant_violations.empty());
    CHECK(codec::dump(encode(report)) == codec::dump(encode(replay(s))));
}

TEST_CASE("state invariants flag an incoherent ledger")
{
    ContractState s = make_initialized_state(fixed_price_config());
    s.total_deposited = 3;
    auto const v = check_state_invariants(s, 150, 0);
    CHECK(std::any_of(v.begin(), v.end(), [](auto const &x) { return x.invariant == "ledger_coherence"; }));
}

TEST_CASE("fuzz is deterministic and jobs do not change results")
{
    FuzzOptions o{.seed = 9, .cases = 150};
    auto const one = codec::dump(encode(fuzz(o)));
    o.jobs = 3;
    CHECK(codec::dump(encode(fuzz(o))) == one);
    CHECK(fuzz(o).ok());
    CHECK_THROWS_AS((void)fuzz({.seed = 1, .cases = 0}), Error);
}

TEST_CASE("minimize leaves a scenario alone when the invariant never fires")
{
    Rng rng(3);
    Scenario const s = random_scenario(rng, 10);
    CHECK(minimize(s, "no_such_invariant") == s);
}

TEST_CASE("trace matrix maps every lemma")
{
    auto const matrix = build_trace_matrix({.seed = 1, .samples = 200, .sequences = 40});
    for (auto const &row : matrix.rows) {
        CAPTURE(row.lemma);
        CHECK_FALSE(row.checks.empty());
    }
    CHECK(matrix.ok());
}
