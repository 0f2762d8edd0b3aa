#pragma once

#include <launchpad/config.hpp>
#include <launchpad/deposit.hpp>
#include <launchpad/withdraw.hpp>

#include <map>
#include <string_view>
#include <vector>

namespace launchpad
{

enum class SaleStatus
{
    not_initialized,
    locked,
    not_started,
    ongoing,
    success,
    failed,
};

std::string_view to_string(SaleStatus status) noexcept;

/// Full contract state. Transitions never mutate a state; they return a new
/// one. Callers serialize transition application themselves.
struct ContractState
{
    Config config;
    Nat total_deposited{0};
    Nat total_sold_tokens{0};
    bool is_sale_token_set{false};
    bool is_locked{false};
    std::map<AccountId, IntentAccount> accounts;
    Nat participants_count{0};
    std::map<IntentAccount, InvestmentAmount> investments;
    std::vector<IntentAccount> distributed_accounts;
    std::map<IntentAccount, Nat> individual_vesting_claimed;

    friend bool operator==(ContractState const &, ContractState const &) =
        default;
};

/// Initialized, unlocked state with empty ledgers. Throws
/// Error(precondition) listing every violated config clause.
ContractState make_initialized_state(Config config);

bool is_valid(ContractState const &state);

SaleStatus get_status(ContractState const &state, Nat time);

struct DepositTransition
{
    ContractState state;
    DepositOutcome outcome;
};

DepositTransition transition_deposit(
    ContractState const &state, AccountId const &account_id, Nat amount,
    IntentAccount const &intent, Nat time);

ContractState transition_withdraw(
    ContractState const &state, IntentAccount const &intent, Nat amount,
    Nat time);

ContractState transition_claim(
    ContractState const &state, IntentAccount const &intent, Nat time);

ContractState transition_claim_individual_vesting(
    ContractState const &state, IntentAccount const &intent, Nat time);

ContractState transition_distribute_tokens(ContractState const &state, Nat time);

} // namespace launchpad
