#pragma once

#include <launchpad/config.hpp>
#include <launchpad/nat.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>

// Reference model evaluated in exact rational arithmetic. It shares no code
// with the 128/256-bit integer paths it is compared against.
namespace launchpad::harness::oracle
{

using Big = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Big big(Nat value);

/// nullopt when the value is negative or needs more than 128 bits.
std::optional<Nat> narrow(Big const &value);

/// floor of a non-negative rational.
Big floor(Rational const &value);

/// floor(x * y / k) via an exact rational.
Big mul_div_floor(Big const &x, Big const &y, Big const &k);

Big assets(Big const &weight, PriceFraction const &price);
Big assets_revert(Big const &assets, PriceFraction const &price);

/// Percentage of the discount active at `time`, found by counting every
/// window. nullopt when none is active; throws if more than one is.
std::optional<Big> active_percentage(Config const &config, Nat time);

Big weighted(Big const &amount, Nat time, Config const &config);
Big original(Big const &weighted_amount, Nat time, Config const &config);

struct Deposit
{
    Big new_amount;
    Big weight_added;
    Big new_total_deposited;
    Big new_total_sold;
    Big refund;
};

/// Deposit outcome for either mechanic. Preconditions are the caller's.
Deposit deposit(
    Config const &config, Big const &amount, Big const &deposited,
    Big const &sold, Nat time);

Big vesting(
    Big const &total, Big const &start, Big const &time,
    VestingSchedule const &schedule);

} // namespace launchpad::harness::oracle
