#include <launchpad/assets.hpp>
#include <launchpad/deposit.hpp>

namespace launchpad
{

Nat calculate_refund_spec(
    Config const &config, Nat amount, Nat sold, Nat time,
    PriceFraction const &price)
{
    require(amount > 0, "refund requires a positive deposit");
    require(sold < config.sale_amount, "sale is sold out");

    Nat const weight = calculate_weighted_amount_spec(amount, time, config);
    Nat const assets = calculate_assets(weight, price);
    Nat const potential = checked_add(sold, assets);
    require(
        potential > config.sale_amount,
        "refund requires the deposit to exceed the sale cap");

    Nat const excess = potential - config.sale_amount;
    Nat const remain = calculate_assets_revert(excess, price);
    // O_S needs a positive input; a reverted excess of zero refunds nothing.
    Nat const refund =
        remain == 0 ? 0 : calculate_original_amount_spec(remain, time, config);
#ifdef LAUNCHPAD_MUTANT_REFUND_PLUS_ONE
    return refund + 1;
#else
    return refund;
#endif
}

DepositOutcome deposit_fixed_price_spec(
    Config const &config, Nat amount, Nat deposited, Nat sold, Nat time)
{
    require(amount > 0, "deposit amount must be positive");
    PriceFraction const &price = config.fixed_price();
    require(sold < config.sale_amount, "sale is sold out");

    Nat const weight = calculate_weighted_amount_spec(amount, time, config);
    Nat const assets = calculate_assets(weight, price);
    Nat const potential = checked_add(sold, assets);

    if (potential <= config.sale_amount) {
        return DepositOutcome{
            .new_amount = amount,
            .weight_added = assets,
            .new_total_deposited = checked_add(deposited, amount),
            .new_total_sold = potential,
            .refund = 0,
        };
    }

    Nat const refund = calculate_refund_spec(config, amount, sold, time, price);
    Nat const kept = checked_sub(amount, refund);
    return DepositOutcome{
        .new_amount = kept,
        .weight_added = config.sale_amount - sold,
        .new_total_deposited = checked_add(deposited, kept),
        .new_total_sold = config.sale_amount,
        .refund = refund,
    };
}

DepositOutcome deposit_price_discovery_spec(
    Config const &config, Nat amount, Nat deposited, Nat sold, Nat time)
{
    require(amount > 0, "deposit amount must be positive");
    require(
        !config.is_fixed_price(), "operation requires a PriceDiscovery sale");

    Nat const weight = calculate_weighted_amount_spec(amount, time, config);
    return DepositOutcome{
        .new_amount = amount,
        .weight_added = weight,
        .new_total_deposited = checked_add(deposited, amount),
        .new_total_sold = checked_add(sold, weight),
        .refund = 0,
    };
}

DepositOutcome deposit_spec(
    Config const &config, Nat amount, Nat deposited, Nat sold, Nat time)
{
    if (config.is_fixed_price()) {
        return deposit_fixed_price_spec(config, amount, deposited, sold, time);
    }
    return deposit_price_discovery_spec(config, amount, deposited, sold, time);
}

} // namespace launchpad
