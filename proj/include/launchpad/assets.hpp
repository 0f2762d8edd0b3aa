#pragma once

#include <launchpad/nat.hpp>

namespace launchpad
{

/// Exchange rate as deposit-token units per sale-token units. Both sides
/// must be positive.
struct PriceFraction
{
    Nat deposit_token_amount;
    Nat sale_token_amount;

    bool valid() const noexcept
    {
        return deposit_token_amount > 0 && sale_token_amount > 0;
    }

    friend bool operator==(PriceFraction const &, PriceFraction const &) =
        default;
};

/// floor(w * sT / dT)
Nat calculate_assets(Nat weight, PriceFraction const &price);

/// floor(a * dT / sT)
Nat calculate_assets_revert(Nat assets, PriceFraction const &price);

struct RoundTrip
{
    Nat assets;
    Nat reverted;
    Nat rem1; // (w * sT) mod dT
    Nat rem2; // (assets * dT) mod sT

    friend bool operator==(RoundTrip const &, RoundTrip const &) = default;
};

/// Converts w forward and back, exposing both division remainders so the
/// loss (w - reverted) * sT == rem1 + rem2 can be observed.
RoundTrip round_trip_remainders(Nat weight, PriceFraction const &price);

} // namespace launchpad
