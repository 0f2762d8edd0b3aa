#pragma once

#include <launchpad/config.hpp>

namespace launchpad
{

/// Result of accepting a deposit: principal kept, weight credited, the two
/// new totals, and the part of the deposit handed back.
struct DepositOutcome
{
    Nat new_amount;
    Nat weight_added;
    Nat new_total_deposited;
    Nat new_total_sold;
    Nat refund;

    friend bool operator==(DepositOutcome const &, DepositOutcome const &) =
        default;
};

/// Deposit-token value of the part of a fixed-price deposit that overflows
/// the sale cap. Requires sold < sale_amount < sold + assets.
Nat calculate_refund_spec(
    Config const &config, Nat amount, Nat sold, Nat time,
    PriceFraction const &price);

DepositOutcome deposit_fixed_price_spec(
    Config const &config, Nat amount, Nat deposited, Nat sold, Nat time);

DepositOutcome deposit_price_discovery_spec(
    Config const &config, Nat amount, Nat deposited, Nat sold, Nat time);

/// Dispatches on the sale mechanic.
DepositOutcome deposit_spec(
    Config const &config, Nat amount, Nat deposited, Nat sold, Nat time);

} // namespace launchpad
