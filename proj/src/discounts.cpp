#include <launchpad/arith.hpp>
#include <launchpad/discounts.hpp>

#include <algorithm>
#include <vector>

namespace launchpad
{

namespace
{
    void require_weighting_args(Nat amount, Nat percentage)
    {
        require(amount > 0, "discount weighting requires a positive amount");
        require(
            percentage > 0 && percentage <= kMultiplier,
            "discount percentage must be in (0, MULTIPLIER]");
    }
}

bool valid_discount(Discount const &d) noexcept
{
    return d.percentage > 0 && d.percentage <= kMultiplier &&
           d.start_date < d.end_date;
}

bool is_active(Discount const &d, Nat time) noexcept
{
    return d.start_date <= time && time < d.end_date;
}

Nat calculate_weighted_amount(Nat amount, Nat percentage)
{
    require_weighting_args(amount, percentage);
    return mul_div_floor(amount, kMultiplier + percentage, kMultiplier);
}

Nat calculate_original_amount(Nat weighted_amount, Nat percentage)
{
    require_weighting_args(weighted_amount, percentage);
    return mul_div_floor(
        weighted_amount, kMultiplier, kMultiplier + percentage);
}

bool discounts_do_not_overlap(std::span<Discount const> discounts)
{
    // Sorted by start, half-open windows are pairwise disjoint iff each one
    // starts no earlier than every previous one ends.
    std::vector<Discount> sorted(discounts.begin(), discounts.end());
    std::sort(
        sorted.begin(), sorted.end(), [](Discount const &a, Discount const &b) {
            return a.start_date < b.start_date;
        });
    Nat furthest_end = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && furthest_end > sorted[i].start_date) {
            return false;
        }
        furthest_end = std::max(furthest_end, sorted[i].end_date);
    }
    return true;
}

std::optional<Discount>
find_active_discount(std::span<Discount const> discounts, Nat time)
{
    for (auto const &d : discounts) {
        if (is_active(d, time)) {
            return d;
        }
    }
    return std::nullopt;
}

} // namespace launchpad
