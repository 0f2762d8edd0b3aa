#pragma once

#include <launchpad/config.hpp>
#include <launchpad/harness/properties.hpp>

#include <doctest.h>

#include <ostream>
#include <string>

namespace launchpad
{

// doctest prints values through operator<<; Nat has no stream operator.
inline std::ostream &operator<<(std::ostream &os, unsigned __int128 v)
{
    return os << to_string(v);
}

} // namespace launchpad

namespace test
{

using namespace launchpad;

inline Config fixed_price_config(Nat dT = 1, Nat sT = 1, Nat sale = 1000)
{
    return Config{
        .start_date = 100,
        .end_date = 200,
        .mechanic = FixedPrice{{dT, sT}},
        .sale_amount = sale,
        .total_sale_amount = sale,
        .soft_cap = 1,
        .discounts = {},
        .vesting = std::nullopt,
        .distribution_proportions = {IntentAccount("solver"), {}},
    };
}

inline Config price_discovery_config(Nat sale = 1000)
{
    Config c = fixed_price_config(1, 1, sale);
    c.mechanic = PriceDiscovery{};
    return c;
}

inline Config with_discount(Config c, Nat percentage)
{
    c.discounts.push_back({.start_date = 100, .end_date = 150, .percentage = percentage});
    return c;
}

/// Runs a registered property check at a small budget.
inline void run_property(std::string const &name)
{
    harness::PropertyBudget const budget{.seed = 0x5eed, .samples = 3000, .sequences = 300};
    auto const result = harness::run_check(harness::find_check(name), budget);
    INFO(name << ": " << result.counterexample);
    CHECK(result.cases > 0);
    CHECK(result.violations == 0);
}

} // namespace test
