#pragma once

#include <launchpad/assets.hpp>
#include <launchpad/discounts.hpp>
#include <launchpad/nat.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace launchpad
{

/// Opaque, totally ordered identifier of 1 to 64 bytes.
template <typename Tag>
class Identifier
{
public:
    static constexpr std::size_t max_length = 64;

    explicit Identifier(std::string value)
        : value_{std::move(value)}
    {
        if (value_.empty() || value_.size() > max_length) {
            fail(
                ErrorKind::precondition_violation,
                "identifier must be 1 to 64 bytes: \"" + value_ + "\"");
        }
    }

    std::string const &str() const noexcept
    {
        return value_;
    }

    friend auto operator<=>(Identifier const &, Identifier const &) = default;
    friend bool operator==(Identifier const &, Identifier const &) = default;

private:
    std::string value_;
};

struct IntentAccountTag;
struct AccountIdTag;

/// Internal participant identity; the key of the investment ledger.
using IntentAccount = Identifier<IntentAccountTag>;
/// External identifier that gets bound onto an IntentAccount.
using AccountId = Identifier<AccountIdTag>;

struct FixedPrice
{
    PriceFraction price;

    friend bool operator==(FixedPrice const &, FixedPrice const &) = default;
};

struct PriceDiscovery
{
    friend bool
    operator==(PriceDiscovery const &, PriceDiscovery const &) = default;
};

using Mechanic = std::variant<FixedPrice, PriceDiscovery>;

struct VestingSchedule
{
    Nat cliff_period;
    Nat vesting_period;

    friend bool
    operator==(VestingSchedule const &, VestingSchedule const &) = default;
};

/// vesting_period > 0 and cliff_period <= vesting_period.
bool valid_vesting_schedule(VestingSchedule const &v) noexcept;

struct StakeholderProportion
{
    IntentAccount account;
    Nat allocation;
    std::optional<VestingSchedule> vesting;

    bool valid() const noexcept;

    friend bool operator==(
        StakeholderProportion const &, StakeholderProportion const &) = default;
};

struct DistributionProportions
{
    IntentAccount solver_account;
    std::vector<StakeholderProportion> stakeholder_proportions;

    /// Solver and every stakeholder account pairwise distinct.
    bool is_unique() const;

    friend bool operator==(
        DistributionProportions const &,
        DistributionProportions const &) = default;
};

/// Immutable sale parameterization.
struct Config
{
    Nat start_date;
    Nat end_date;
    Mechanic mechanic;
    Nat sale_amount;
    Nat total_sale_amount;
    Nat soft_cap;
    std::vector<Discount> discounts;
    std::optional<VestingSchedule> vesting;
    DistributionProportions distribution_proportions;

    bool is_fixed_price() const noexcept
    {
        return std::holds_alternative<FixedPrice>(mechanic);
    }

    /// Price of a FixedPrice sale; Error(precondition) for PriceDiscovery.
    PriceFraction const &fixed_price() const;

    friend bool operator==(Config const &, Config const &) = default;
};

enum class ConfigClause
{
    dates,
    mechanics,
    discounts,
    vesting,
    stakeholders,
    accounting,
};

std::string_view to_string(ConfigClause clause) noexcept;

struct ConfigValidation
{
    std::vector<ConfigClause> violated;

    bool ok() const noexcept
    {
        return violated.empty();
    }

    /// Comma separated clause names, for diagnostics.
    std::string describe() const;
};

/// Evaluates every validity clause and reports all that fail.
ConfigValidation validate_config(Config const &config);

bool valid_config(Config const &config);

/// Throws Error(precondition) naming every violated clause.
void require_valid_config(Config const &config);

/// Time-aware weighting: identity without an active discount, otherwise the
/// discount's weighted amount. Requires amount > 0.
Nat calculate_weighted_amount_spec(Nat amount, Nat time, Config const &config);

/// Inverse of calculate_weighted_amount_spec up to one unit of truncation.
/// Requires weighted_amount > 0.
Nat calculate_original_amount_spec(
    Nat weighted_amount, Nat time, Config const &config);

std::optional<StakeholderProportion> get_stakeholder_proportion(
    DistributionProportions const &props, IntentAccount const &account);

} // namespace launchpad
