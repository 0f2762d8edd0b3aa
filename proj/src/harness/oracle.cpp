#include <launchpad/discounts.hpp>
#include <launchpad/harness/oracle.hpp>

#include <cstdint>
#include <stdexcept>

namespace launchpad::harness::oracle
{

Big big(Nat value)
{
    Big hi = static_cast<std::uint64_t>(value >> 64);
    Big lo = static_cast<std::uint64_t>(value);
    return (hi << 64) | lo;
}

std::optional<Nat> narrow(Big const &value)
{
    static Big const max = big(kNatMax);
    if (value < 0 || value > max) {
        return std::nullopt;
    }
    Big const hi = value >> 64;
    Big const lo = value & Big(~std::uint64_t{0});
    return (Nat{hi.convert_to<std::uint64_t>()} << 64) |
           Nat{lo.convert_to<std::uint64_t>()};
}

Big floor(Rational const &value)
{
    if (value < 0) {
        throw std::domain_error("oracle floor of a negative rational");
    }
    return boost::multiprecision::numerator(value) /
           boost::multiprecision::denominator(value);
}

Big mul_div_floor(Big const &x, Big const &y, Big const &k)
{
    return floor(Rational(x * y, k));
}

Big assets(Big const &weight, PriceFraction const &price)
{
    return floor(
        Rational(weight) * Rational(big(price.sale_token_amount)) /
        Rational(big(price.deposit_token_amount)));
}

Big assets_revert(Big const &assets, PriceFraction const &price)
{
    return floor(
        Rational(assets) * Rational(big(price.deposit_token_amount)) /
        Rational(big(price.sale_token_amount)));
}

std::optional<Big> active_percentage(Config const &config, Nat time)
{
    std::optional<Big> found;
    for (auto const &d : config.discounts) {
        if (d.start_date <= time && time < d.end_date) {
            if (found) {
                throw std::logic_error("oracle: two discounts active at once");
            }
            found = big(d.percentage);
        }
    }
    return found;
}

Big weighted(Big const &amount, Nat time, Config const &config)
{
    auto const p = active_percentage(config, time);
    if (!p) {
        return amount;
    }
    Big const m = big(kMultiplier);
    return floor(Rational(amount) * (Rational(1) + Rational(*p, m)));
}

Big original(Big const &weighted_amount, Nat time, Config const &config)
{
    auto const p = active_percentage(config, time);
    if (!p) {
        return weighted_amount;
    }
    Big const m = big(kMultiplier);
    return floor(Rational(weighted_amount) / (Rational(1) + Rational(*p, m)));
}

Deposit deposit(
    Config const &config, Big const &amount, Big const &deposited,
    Big const &sold, Nat time)
{
    Big const w = weighted(amount, time, config);
    auto const *fp = std::get_if<FixedPrice>(&config.mechanic);
    if (fp == nullptr) {
        return {amount, w, deposited + amount, sold + w, 0};
    }

    Big const a = assets(w, fp->price);
    Big const cap = big(config.sale_amount);
    if (sold + a <= cap) {
        return {amount, a, deposited + amount, sold + a, 0};
    }
    Big const excess = sold + a - cap;
    Big const remain = assets_revert(excess, fp->price);
    Big const refund = remain == 0 ? Big(0) : original(remain, time, config);
    return {amount - refund, cap - sold, deposited + amount - refund, cap, refund};
}

Big vesting(
    Big const &total, Big const &start, Big const &time,
    VestingSchedule const &schedule)
{
    Big const cliff_end = start + big(schedule.cliff_period);
    Big const vest_end = start + big(schedule.vesting_period);
    if (time < cliff_end) {
        return 0;
    }
    if (time >= vest_end) {
        return total;
    }
    return floor(
        Rational(total) * Rational(time - start, big(schedule.vesting_period)));
}

} // namespace launchpad::harness::oracle
