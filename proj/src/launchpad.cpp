#include <launchpad/claim.hpp>
#include <launchpad/distribution.hpp>
#include <launchpad/launchpad.hpp>

namespace launchpad
{

namespace
{
    void require_valid_state(ContractState const &state)
    {
        require_valid_config(state.config);
    }

    void require_status(
        ContractState const &state, Nat time, SaleStatus expected,
        char const *action)
    {
        auto const status = get_status(state, time);
        if (status != expected) {
            fail(
                ErrorKind::state_violation,
                std::string(action) + " not allowed while sale is " +
                    std::string(to_string(status)));
        }
    }

    InvestmentAmount const &
    find_investment(ContractState const &state, IntentAccount const &intent)
    {
        auto const it = state.investments.find(intent);
        if (it == state.investments.end()) {
            fail(
                ErrorKind::precondition_violation,
                "no investment for account " + intent.str());
        }
        return it->second;
    }
}

std::string_view to_string(SaleStatus status) noexcept
{
    switch (status) {
    case SaleStatus::not_initialized:
        return "not_initialized";
    case SaleStatus::locked:
        return "locked";
    case SaleStatus::not_started:
        return "not_started";
    case SaleStatus::ongoing:
        return "ongoing";
    case SaleStatus::success:
        return "success";
    case SaleStatus::failed:
        return "failed";
    }
    return "unknown";
}

ContractState make_initialized_state(Config config)
{
    require_valid_config(config);
    ContractState state{.config = std::move(config)};
    state.is_sale_token_set = true;
    return state;
}

bool is_valid(ContractState const &state)
{
    return valid_config(state.config);
}

SaleStatus get_status(ContractState const &state, Nat time)
{
    if (!state.is_sale_token_set) {
        return SaleStatus::not_initialized;
    }
    if (state.is_locked) {
        return SaleStatus::locked;
    }
    if (time < state.config.start_date) {
        return SaleStatus::not_started;
    }
    if (time < state.config.end_date) {
        return SaleStatus::ongoing;
    }
    if (state.total_deposited >= state.config.soft_cap) {
        return SaleStatus::success;
    }
    return SaleStatus::failed;
}

DepositTransition transition_deposit(
    ContractState const &state, AccountId const &account_id, Nat amount,
    IntentAccount const &intent, Nat time)
{
    require_valid_state(state);
    require_status(state, time, SaleStatus::ongoing, "deposit");
    require(amount > 0, "deposit amount must be positive");

    auto const bound = state.accounts.find(account_id);
    if (bound != state.accounts.end() && bound->second != intent) {
        fail(
            ErrorKind::precondition_violation,
            "account id " + account_id.str() + " is already bound to " +
                bound->second.str());
    }

    auto const outcome = deposit_spec(
        state.config, amount, state.total_deposited, state.total_sold_tokens,
        time);

    ContractState next = state;
    next.total_deposited = outcome.new_total_deposited;
    next.total_sold_tokens = outcome.new_total_sold;
    next.accounts.emplace(account_id, intent);

    auto [it, inserted] =
        next.investments.try_emplace(intent, InvestmentAmount{0, 0, 0});
    it->second.amount = checked_add(it->second.amount, outcome.new_amount);
    it->second.weight = checked_add(it->second.weight, outcome.weight_added);
    if (inserted) {
        next.participants_count = checked_add(next.participants_count, 1);
    }
    return {std::move(next), outcome};
}

ContractState transition_withdraw(
    ContractState const &state, IntentAccount const &intent, Nat amount,
    Nat time)
{
    require_valid_state(state);
    auto const status = get_status(state, time);
    bool const allowed =
        status == SaleStatus::failed || status == SaleStatus::locked ||
        (status == SaleStatus::ongoing && !state.config.is_fixed_price());
    if (!allowed) {
        fail(
            ErrorKind::state_violation,
            "withdraw not allowed while " +
                std::string(
                    state.config.is_fixed_price() ? "fixed-price"
                                                  : "price-discovery") +
                " sale is " + std::string(to_string(status)));
    }
    auto const &investment = find_investment(state, intent);
    auto const result = withdraw_spec(
        state.config, investment, amount, state.total_sold_tokens, time);

    ContractState next = state;
    next.total_deposited = checked_sub(state.total_deposited, amount);
    next.total_sold_tokens = result.sold;
    next.investments.at(intent) = result.investment;
    return next;
}

ContractState transition_claim(
    ContractState const &state, IntentAccount const &intent, Nat time)
{
    require_valid_state(state);
    require_status(state, time, SaleStatus::success, "claim");
    auto const &investment = find_investment(state, intent);
    Nat const available = available_for_claim_spec(
        investment, state.total_sold_tokens, state.config, time);
    require(available > investment.claimed, "nothing to claim");

    ContractState next = state;
    next.investments.at(intent).claimed = available;
    return next;
}

ContractState transition_claim_individual_vesting(
    ContractState const &state, IntentAccount const &intent, Nat time)
{
    require_valid_state(state);
    require_status(state, time, SaleStatus::success, "individual claim");
    auto const proportion = get_stakeholder_proportion(
        state.config.distribution_proportions, intent);
    if (!proportion) {
        fail(
            ErrorKind::precondition_violation,
            "not a stakeholder: " + intent.str());
    }
    Nat const available =
        available_for_individual_vesting_claim_spec(*proportion, state.config, time);
    auto const previous = state.individual_vesting_claimed.find(intent);
    Nat const claimed =
        previous == state.individual_vesting_claimed.end() ? 0
                                                           : previous->second;
    require(available > claimed, "nothing to claim");

    ContractState next = state;
    next.individual_vesting_claimed[intent] = available;
    return next;
}

ContractState transition_distribute_tokens(ContractState const &state, Nat time)
{
    require_valid_state(state);
    require_status(state, time, SaleStatus::success, "distribution");
    auto const pending =
        get_filtered_distributions_spec(state.config, state.distributed_accounts);
    require(!pending.empty(), "no stakeholders pending distribution");

    ContractState next = state;
    next.distributed_accounts.insert(
        next.distributed_accounts.end(), pending.begin(), pending.end());
    return next;
}

} // namespace launchpad
