#include <launchpad/config.hpp>

#include <set>

namespace launchpad
{

bool valid_vesting_schedule(VestingSchedule const &v) noexcept
{
    return v.vesting_period > 0 && v.cliff_period <= v.vesting_period;
}

bool StakeholderProportion::valid() const noexcept
{
    return allocation > 0 &&
           (!vesting.has_value() || valid_vesting_schedule(*vesting));
}

bool DistributionProportions::is_unique() const
{
    std::set<IntentAccount> seen{solver_account};
    for (auto const &p : stakeholder_proportions) {
        if (!seen.insert(p.account).second) {
            return false;
        }
    }
    return true;
}

PriceFraction const &Config::fixed_price() const
{
    auto const *fp = std::get_if<FixedPrice>(&mechanic);
    require(fp != nullptr, "operation requires a FixedPrice sale");
    return fp->price;
}

std::string_view to_string(ConfigClause clause) noexcept
{
    switch (clause) {
    case ConfigClause::dates:
        return "dates";
    case ConfigClause::mechanics:
        return "mechanics";
    case ConfigClause::discounts:
        return "discounts";
    case ConfigClause::vesting:
        return "vesting";
    case ConfigClause::stakeholders:
        return "stakeholders";
    case ConfigClause::accounting:
        return "accounting";
    }
    return "unknown";
}

std::string ConfigValidation::describe() const
{
    std::string out;
    for (auto const clause : violated) {
        if (!out.empty()) {
            out += ", ";
        }
        out += to_string(clause);
    }
    return out;
}

ConfigValidation validate_config(Config const &config)
{
    ConfigValidation result;
    auto check = [&](bool holds, ConfigClause clause) {
        if (!holds) {
            result.violated.push_back(clause);
        }
    };

    check(config.start_date < config.end_date, ConfigClause::dates);

    auto const *fp = std::get_if<FixedPrice>(&config.mechanic);
    check(fp == nullptr || fp->price.valid(), ConfigClause::mechanics);

    bool discounts_ok = discounts_do_not_overlap(config.discounts);
    for (auto const &d : config.discounts) {
        discounts_ok = discounts_ok && valid_discount(d);
    }
    check(discounts_ok, ConfigClause::discounts);

    check(
        !config.vesting.has_value() || valid_vesting_schedule(*config.vesting),
        ConfigClause::vesting);

    auto const &props = config.distribution_proportions;
    bool stakeholders_ok = props.is_unique();
    for (auto const &p : props.stakeholder_proportions) {
        stakeholders_ok = stakeholders_ok && p.valid();
    }
    check(stakeholders_ok, ConfigClause::stakeholders);

    // An allocation sum that does not fit in 128 bits cannot equal any
    // representable total.
    bool accounting_ok = true;
    Nat sum = config.sale_amount;
    for (auto const &p : props.stakeholder_proportions) {
        if (__builtin_add_overflow(sum, p.allocation, &sum)) {
            accounting_ok = false;
            break;
        }
    }
    check(
        accounting_ok && sum == config.total_sale_amount,
        ConfigClause::accounting);

    return result;
}

bool valid_config(Config const &config)
{
    return validate_config(config).ok();
}

void require_valid_config(Config const &config)
{
    auto const validation = validate_config(config);
    if (!validation.ok()) {
        fail(
            ErrorKind::precondition_violation,
            "invalid config: " + validation.describe());
    }
}

Nat calculate_weighted_amount_spec(Nat amount, Nat time, Config const &config)
{
    require(amount > 0, "weighted amount requires a positive amount");
    auto const active = find_active_discount(config.discounts, time);
    if (!active) {
        return amount;
    }
    return calculate_weighted_amount(amount, active->percentage);
}

Nat calculate_original_amount_spec(
    Nat weighted_amount, Nat time, Config const &config)
{
    require(
        weighted_amount > 0, "original amount requires a positive amount");
    auto const active = find_active_discount(config.discounts, time);
    if (!active) {
        return weighted_amount;
    }
    return calculate_original_amount(weighted_amount, active->percentage);
}

std::optional<StakeholderProportion> get_stakeholder_proportion(
    DistributionProportions const &props, IntentAccount const &account)
{
    for (auto const &p : props.stakeholder_proportions) {
        if (p.account == account) {
            return p;
        }
    }
    return std::nullopt;
}

} // namespace launchpad
