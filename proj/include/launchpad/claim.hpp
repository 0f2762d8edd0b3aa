#pragma once

#include <launchpad/config.hpp>
#include <launchpad/withdraw.hpp>

namespace launchpad
{

struct VestingContext
{
    Nat total_assets;
    Nat vesting_start;
    VestingSchedule schedule;
};

/// FixedPrice: the weight itself. PriceDiscovery: the pro-rata share
/// floor(w * sale_amount / sold), which needs sold > 0.
Nat user_allocation_spec(Nat weight, Nat sold, Config const &config);

/// Zero before the cliff, everything once the vesting period has elapsed,
/// linear in between.
Nat calculate_vesting_spec(VestingContext const &ctx, Nat time);

/// Public-sale entitlement at `time`; vesting starts at the sale end date.
Nat available_for_claim_spec(
    InvestmentAmount const &investment, Nat sold, Config const &config,
    Nat time);

Nat available_for_individual_vesting_claim_spec(
    StakeholderProportion const &proportion, Config const &config, Nat time);

} // namespace launchpad
