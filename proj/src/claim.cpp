#include <launchpad/arith.hpp>
#include <launchpad/claim.hpp>

namespace launchpad
{

Nat user_allocation_spec(Nat weight, Nat sold, Config const &config)
{
    require(weight <= sold, "allocation weight exceeds total sold");
    if (config.is_fixed_price()) {
        return weight;
    }
    require(sold > 0, "price-discovery allocation with zero total sold");
    return mul_div_floor(weight, config.sale_amount, sold);
}

Nat calculate_vesting_spec(VestingContext const &ctx, Nat time)
{
    require(
        valid_vesting_schedule(ctx.schedule), "invalid vesting schedule");
    // Before the start nothing has elapsed; comparing elapsed time avoids
    // overflow in start + period.
    if (time < ctx.vesting_start) {
        return 0;
    }
    Nat const elapsed = time - ctx.vesting_start;
    if (elapsed < ctx.schedule.cliff_period) {
        return 0;
    }
    if (elapsed >= ctx.schedule.vesting_period) {
        return ctx.total_assets;
    }
    return mul_div_floor(
        ctx.total_assets, elapsed, ctx.schedule.vesting_period);
}

Nat available_for_claim_spec(
    InvestmentAmount const &investment, Nat sold, Config const &config,
    Nat time)
{
    Nat const allocation = user_allocation_spec(investment.weight, sold, config);
    if (!config.vesting) {
        return allocation;
    }
    return calculate_vesting_spec(
        {.total_assets = allocation,
         .vesting_start = config.end_date,
         .schedule = *config.vesting},
        time);
}

Nat available_for_individual_vesting_claim_spec(
    StakeholderProportion const &proportion, Config const &config, Nat time)
{
    if (!proportion.vesting) {
        return proportion.allocation;
    }
    return calculate_vesting_spec(
        {.total_assets = proportion.allocation,
         .vesting_start = config.end_date,
         .schedule = *proportion.vesting},
        time);
}

} // namespace launchpad
