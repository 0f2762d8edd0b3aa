#pragma once

#include <launchpad/nat.hpp>

#include <optional>
#include <span>

namespace launchpad
{

/// Fixed-point basis for percentages: 10000 == 100%.
inline constexpr Nat kMultiplier = 10000;

/// Time-windowed bonus, active on the half-open interval [start, end).
struct Discount
{
    Nat start_date;
    Nat end_date;
    Nat percentage;

    friend bool operator==(Discount const &, Discount const &) = default;
};

bool valid_discount(Discount const &d) noexcept;

bool is_active(Discount const &d, Nat time) noexcept;

/// floor(a * (M + p) / M). Requires a > 0 and 0 < p <= M.
Nat calculate_weighted_amount(Nat amount, Nat percentage);

/// floor(wa * M / (M + p)). Requires wa > 0 and 0 < p <= M.
Nat calculate_original_amount(Nat weighted_amount, Nat percentage);

bool discounts_do_not_overlap(std::span<Discount const> discounts);

/// First discount active at `time`, scanning left to right. Under the
/// non-overlap invariant this is the only active one.
std::optional<Discount>
find_active_discount(std::span<Discount const> discounts, Nat time);

} // namespace launchpad
