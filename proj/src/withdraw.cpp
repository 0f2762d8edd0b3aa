#include <launchpad/withdraw.hpp>

#include <algorithm>

namespace launchpad
{

WithdrawResult withdraw_fixed_price_spec(
    InvestmentAmount const &investment, Nat amount, Nat sold)
{
    require(amount > 0, "withdraw amount must be positive");
    require(
        amount == investment.amount,
        "fixed-price withdrawal must take the full principal");
    require(investment.weight <= sold, "investment weight exceeds total sold");

    return WithdrawResult{
        .investment = {.amount = 0, .weight = 0, .claimed = investment.claimed},
        .sold = sold - investment.weight,
    };
}

WithdrawResult withdraw_price_discovery_spec(
    Config const &config, InvestmentAmount const &investment, Nat amount,
    Nat sold, Nat time)
{
    require(amount > 0, "withdraw amount must be positive");
    require(amount <= investment.amount, "withdraw exceeds principal");
    require(investment.weight <= sold, "investment weight exceeds total sold");

    Nat const remaining = investment.amount - amount;
    // A full exit keeps no weight.
    Nat const recalculated =
        remaining == 0
            ? 0
            : calculate_weighted_amount_spec(remaining, time, config);
    Nat const weight = std::min(investment.weight, recalculated);

    return WithdrawResult{
        .investment =
            {.amount = remaining,
             .weight = weight,
             .claimed = investment.claimed},
        .sold = sold - (investment.weight - weight),
    };
}

WithdrawResult withdraw_spec(
    Config const &config, InvestmentAmount const &investment, Nat amount,
    Nat sold, Nat time)
{
    if (config.is_fixed_price()) {
        return withdraw_fixed_price_spec(investment, amount, sold);
    }
    return withdraw_price_discovery_spec(
        config, investment, amount, sold, time);
}

} // namespace launchpad
