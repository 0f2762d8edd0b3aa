#include "support.hpp"

#include <launchpad/launchpad.hpp>

using namespace test;

namespace
{
IntentAccount const alice("alice");
AccountId const alice_id("acc-alice");

ErrorKind error_of(auto &&f)
{
    try {
        f();
    }
    catch (Error const &e) {
        return e.kind();
    }
    FAIL("no error");
    return ErrorKind::parse;
}
} // namespace

TEST_CASE("status table")
{
    ContractState s = make_initialized_state(fixed_price_config());
    CHECK(get_status(s, 150) == SaleStatus::ongoing);
    CHECK(get_status(s, 99) == SaleStatus::not_started);
    CHECK(get_status(s, 200) == SaleStatus::failed);

    s.total_deposited = 5;
    s.config.soft_cap = 10;
    CHECK(get_status(s, 200) == SaleStatus::failed);
    s.total_deposited = 10;
    CHECK(get_status(s, 200) == SaleStatus::success);

    s.is_locked = true;
    CHECK(get_status(s, 150) == SaleStatus::locked);
    s.is_sale_token_set = false;
    CHECK(get_status(s, 0) == SaleStatus::not_initialized);
    CHECK(get_status(s, 150) == SaleStatus::not_initialized);
}

TEST_CASE("deposit transition")
{
    ContractState const s0 = make_initialized_state(fixed_price_config(1, 1, 100));
    auto const [s1, out] = transition_deposit(s0, alice_id, 25, alice, 150);
    CHECK(out.refund == 0);
    CHECK(s1.total_deposited == 25);
    CHECK(s1.total_sold_tokens == 25);
    CHECK(s1.participants_count == 1);
    CHECK(s1.investments.at(alice) == InvestmentAmount{25, 25, 0});
    CHECK(s1.accounts.at(alice_id) == alice);

    auto const s2 = transition_deposit(s1, alice_id, 10, alice, 160).state;
    CHECK(s2.participants_count == 1);
    CHECK(s2.investments.at(alice) == InvestmentAmount{35, 35, 0});

    CHECK(error_of([&] { (void)transition_deposit(s0, alice_id, 25, alice, 99); }) ==
          ErrorKind::state_violation);
    CHECK(error_of([&] {
              (void)transition_deposit(s1, alice_id, 1, IntentAccount("bob"), 150);
          }) == ErrorKind::precondition_violation);
}

TEST_CASE("withdraw transition")
{
    Config c = fixed_price_config(1, 1, 100);
    c.soft_cap = 1000;
    ContractState const s1 =
        transition_deposit(make_initialized_state(c), alice_id, 25, alice, 150).state;

    CHECK(error_of([&] { (void)transition_withdraw(s1, alice, 25, 150); }) ==
          ErrorKind::state_violation);

    // failed sale: full refund
    auto const s2 = transition_withdraw(s1, alice, 25, 250);
    CHECK(s2.investments.at(alice) == InvestmentAmount{0, 0, 0});
    CHECK(s2.total_deposited == 0);
    CHECK(s2.total_sold_tokens == 0);

    Config pd = price_discovery_config();
    ContractState const p1 =
        transition_deposit(make_initialized_state(pd), alice_id, 100, alice, 150).state;
    auto const p2 = transition_withdraw(p1, alice, 40, 160);
    CHECK(p2.investments.at(alice) == InvestmentAmount{60, 60, 0});
    CHECK(p2.total_deposited == 60);
    CHECK(p2.total_sold_tokens == 60);
}

TEST_CASE("claim transitions")
{
    Config c = fixed_price_config(1, 1, 1000);
    c.distribution_proportions.stakeholder_proportions = {
        {IntentAccount("fund"), 5000, std::nullopt},
        {IntentAccount("team"), 1000, VestingSchedule{.cliff_period = 50, .vesting_period = 200}}};
    c.total_sale_amount += 6000;
    ContractState const s1 =
        transition_deposit(make_initialized_state(c), alice_id, 77, alice, 150).state;

    auto const s2 = transition_claim(s1, alice, 250);
    CHECK(s2.investments.at(alice).claimed == 77);
    CHECK(error_of([&] { (void)transition_claim(s2, alice, 250); }) ==
          ErrorKind::precondition_violation);

    auto const s3 = transition_claim_individual_vesting(s2, IntentAccount("fund"), 250);
    CHECK(s3.individual_vesting_claimed.at(IntentAccount("fund")) == 5000);
    CHECK_THROWS_AS((void)transition_claim_individual_vesting(s3, IntentAccount("fund"), 250), Error);

    // end 200, cliff 50, vest 200: midpoint at 300
    auto const s4 = transition_claim_individual_vesting(s3, IntentAccount("team"), 300);
    CHECK(s4.individual_vesting_claimed.at(IntentAccount("team")) == 500);
}

TEST_CASE("vested public claim")
{
    Config c = fixed_price_config(1, 1, 1000);
    c.vesting = VestingSchedule{.cliff_period = 50, .vesting_period = 200};
    ContractState const s1 =
        transition_deposit(make_initialized_state(c), alice_id, 1000, alice, 150).state;
    CHECK(transition_claim(s1, alice, 300).investments.at(alice).claimed == 500);
}

TEST_CASE("distribution transition")
{
    Config c = fixed_price_config();
    c.distribution_proportions.solver_account = IntentAccount("S");
    c.distribution_proportions.stakeholder_proportions = {
        {IntentAccount("A"), 1, std::nullopt}, {IntentAccount("B"), 1, std::nullopt}};
    c.total_sale_amount += 2;
    ContractState s = make_initialized_state(c);
    s.total_deposited = 1;
    auto const s1 = transition_distribute_tokens(s, 250);
    CHECK(s1.distributed_accounts ==
          std::vector<IntentAccount>{IntentAccount("S"), IntentAccount("A"), IntentAccount("B")});
    CHECK_THROWS_AS((void)transition_distribute_tokens(s1, 250), Error);

    s.distributed_accounts = {IntentAccount("S")};
    s.config.distribution_proportions.stakeholder_proportions.pop_back();
    s.config.total_sale_amount -= 1;
    CHECK(transition_distribute_tokens(s, 250).distributed_accounts ==
          std::vector<IntentAccount>{IntentAccount("S"), IntentAccount("A")});
}

TEST_CASE("state machine properties")
{
    for (char const *name :
         {"launchpad.status_mutual_exclusion", "launchpad.status_time_forward",
          "launchpad.status_terminal", "launchpad.ledger_coherence"}) {
        SUBCASE(name)
        {
            run_property(name);
        }
    }
}
