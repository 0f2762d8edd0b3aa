#pragma once

#include <launchpad/config.hpp>

namespace launchpad
{

/// Per-participant ledger record.
struct InvestmentAmount
{
    Nat amount;  // principal, deposit-token units
    Nat weight;  // accrued weight or assets
    Nat claimed; // sale-token units already claimed

    friend bool
    operator==(InvestmentAmount const &, InvestmentAmount const &) = default;
};

struct WithdrawResult
{
    InvestmentAmount investment;
    Nat sold;

    friend bool operator==(WithdrawResult const &, WithdrawResult const &) =
        default;
};

/// All-or-nothing: amount must equal the full principal.
WithdrawResult withdraw_fixed_price_spec(
    InvestmentAmount const &investment, Nat amount, Nat sold);

/// Partial or full exit with the remaining weight clamped to
/// min(old weight, weight of the remaining principal at `time`).
WithdrawResult withdraw_price_discovery_spec(
    Config const &config, InvestmentAmount const &investment, Nat amount,
    Nat sold, Nat time);

WithdrawResult withdraw_spec(
    Config const &config, InvestmentAmount const &investment, Nat amount,
    Nat sold, Nat time);

} // namespace launchpad
