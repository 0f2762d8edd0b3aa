#include <launchpad/arith.hpp>
#include <launchpad/assets.hpp>

namespace launchpad
{

namespace
{
    void require_price(PriceFraction const &price)
    {
        require(price.valid(), "price fraction must have dT > 0 and sT > 0");
    }
}

Nat calculate_assets(Nat weight, PriceFraction const &price)
{
    require_price(price);
    return mul_div_floor(
        weight, price.sale_token_amount, price.deposit_token_amount);
}

Nat calculate_assets_revert(Nat assets, PriceFraction const &price)
{
    require_price(price);
    return mul_div_floor(
        assets, price.deposit_token_amount, price.sale_token_amount);
}

RoundTrip round_trip_remainders(Nat weight, PriceFraction const &price)
{
    require_price(price);
    auto const forward = mul_div_rem(
        weight, price.sale_token_amount, price.deposit_token_amount);
    auto const back = mul_div_rem(
        forward.quotient, price.deposit_token_amount, price.sale_token_amount);
    return RoundTrip{
        .assets = forward.quotient,
        .reverted = back.quotient,
        .rem1 = forward.remainder,
        .rem2 = back.remainder,
    };
}

} // namespace launchpad
