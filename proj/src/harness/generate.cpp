#include <launchpad/harness/generate.hpp>
#include <launchpad/launchpad.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace launchpad::harness
{

namespace
{
    constexpr std::size_t kUsers = 6;
    char const *const kStakeholderNames[] = {"team", "advisors", "fund", "treasury"};

    Nat small_or_wide(Rng &rng, std::uint64_t small_max, unsigned wide_bits)
    {
        if (rng.chance(9, 10)) {
            return rng.uniform(1, small_max);
        }
        Nat const top = Nat{1} << wide_bits;
        return rng.uniform_nat(1, top);
    }

    std::optional<VestingSchedule> random_vesting(Rng &rng)
    {
        if (rng.chance(1, 2)) {
            return std::nullopt;
        }
        Nat const period = rng.uniform(1, 400);
        Nat const cliff = rng.uniform(0, static_cast<std::uint64_t>(period));
        return VestingSchedule{.cliff_period = cliff, .vesting_period = period};
    }

    Nat random_percentage(Rng &rng)
    {
        switch (rng.uniform(0, 4)) {
        case 0:
            return 1;
        case 1:
            return kMultiplier;
        default:
            return rng.uniform(1, static_cast<std::uint64_t>(kMultiplier));
        }
    }

    IntentAccount user(std::size_t i)
    {
        return IntentAccount("user" + std::to_string(i));
    }

    AccountId account_id(std::size_t i)
    {
        return AccountId("acc" + std::to_string(i));
    }
}

Config random_config(Rng &rng)
{
    Nat const start = rng.uniform(0, 1000);
    Nat const duration = rng.uniform(1, 500);

    Mechanic mechanic = PriceDiscovery{};
    if (rng.chance(1, 2)) {
        mechanic = FixedPrice{PriceFraction{
            .deposit_token_amount = small_or_wide(rng, 8, 64),
            .sale_token_amount = small_or_wide(rng, 8, 64),
        }};
    }

    Nat sale_amount;
    switch (rng.uniform(0, 3)) {
    case 0:
        sale_amount = rng.uniform(1, 64);
        break;
    case 1:
        sale_amount = rng.uniform(1, 5000);
        break;
    case 2:
        sale_amount = rng.uniform(1, 1'000'000);
        break;
    default:
        sale_amount = rng.uniform_nat(1, Nat{1} << 100);
        break;
    }

    // Non-overlapping windows carved out of [start - 50, end + 50).
    std::vector<Discount> discounts;
    std::uint64_t const windows = rng.uniform(0, 3);
    Nat cursor = start > 50 ? start - 50 : 0;
    Nat const horizon = start + duration + 50;
    for (std::uint64_t i = 0; i < windows && cursor < horizon; ++i) {
        Nat const s = cursor + rng.uniform(0, 40);
        Nat const e = s + rng.uniform(1, 200);
        discounts.push_back(
            {.start_date = s, .end_date = e, .percentage = random_percentage(rng)});
        cursor = e;
    }
    std::reverse(discounts.begin(), discounts.end());
    if (discounts.size() > 1 && rng.chance(1, 2)) {
        std::swap(discounts.front(), discounts.back());
    }

    DistributionProportions props{.solver_account = IntentAccount("solver")};
    Nat total = sale_amount;
    for (char const *name : kStakeholderNames) {
        if (rng.chance(1, 2)) {
            Nat const allocation = rng.uniform(1, 100'000);
            props.stakeholder_proportions.push_back(
                {.account = IntentAccount(name),
                 .allocation = allocation,
                 .vesting = random_vesting(rng)});
            total += allocation;
        }
    }

    return Config{
        .start_date = start,
        .end_date = start + duration,
        .mechanic = mechanic,
        .sale_amount = sale_amount,
        .total_sale_amount = total,
        .soft_cap = rng.uniform(0, 3000),
        .discounts = std::move(discounts),
        .vesting = random_vesting(rng),
        .distribution_proportions = std::move(props),
    };
}

Scenario random_scenario(Rng &rng, std::size_t max_actions)
{
    Scenario scenario{.config = random_config(rng)};
    scenario.is_locked = rng.chance(1, 40);
    scenario.is_sale_token_set = !rng.chance(1, 60);

    Config const &config = scenario.config;
    Nat const span = config.end_date - config.start_date;
    Nat const earliest = config.start_date > span / 4 + 1
                             ? config.start_date - span / 4 - 1
                             : 0;
    Nat const latest = config.end_date + span / 2 + 450;

    std::size_t const count = rng.uniform(0, max_actions);
    std::vector<Nat> times;
    for (std::size_t i = 0; i < count; ++i) {
        // Bias towards the sale window so deposits dominate early on.
        times.push_back(
            rng.chance(3, 5)
                ? rng.uniform_nat(config.start_date, config.end_date - 1)
                : rng.uniform_nat(earliest, latest));
    }
    std::sort(times.begin(), times.end());

    ContractState state = initial_state(scenario);
    auto const &stakeholders =
        config.distribution_proportions.stakeholder_proportions;

    for (Nat const time : times) {
        Action action{.time = time};
        std::size_t const u = rng.uniform(0, kUsers - 1);
        auto const roll = rng.uniform(0, 99);

        if (roll < 50) {
            action.kind = ActionKind::deposit;
            action.intent_account = user(u);
            // Occasionally reuse another user's account id.
            action.account_id =
                account_id(rng.chance(1, 20) ? rng.uniform(0, kUsers - 1) : u);
            switch (rng.uniform(0, 9)) {
            case 0:
                action.amount = rng.log_uniform_nat();
                break;
            case 1:
            case 2:
                action.amount = rng.uniform_nat(
                    1, std::max<Nat>(1, config.sale_amount * 2 / 3 + 1));
                break;
            default:
                action.amount = rng.uniform(1, 1000);
                break;
            }
        }
        else if (roll < 68) {
            action.kind = ActionKind::withdraw;
            action.intent_account = user(u);
            auto const it = state.investments.find(user(u));
            Nat const held = it == state.investments.end() ? 0 : it->second.amount;
            auto const mode = rng.uniform(0, 9);
            if (held > 0 && mode < 6) {
                action.amount = held;
            }
            else if (held > 0 && mode < 9) {
                action.amount = rng.uniform_nat(1, held);
            }
            else {
                action.amount = rng.uniform(0, 1000);
            }
        }
        else if (roll < 84) {
            action.kind = ActionKind::claim;
            action.intent_account = user(u);
        }
        else if (roll < 93) {
            action.kind = ActionKind::claim_individual;
            if (!stakeholders.empty() && rng.chance(4, 5)) {
                action.intent_account =
                    stakeholders[rng.uniform(0, stakeholders.size() - 1)].account;
            }
            else {
                action.intent_account = user(u);
            }
        }
        else {
            action.kind = ActionKind::distribute;
        }

        if (action.kind == ActionKind::deposit && action.amount == 0) {
            action.amount = 1;
        }

        try {
            switch (action.kind) {
            case ActionKind::deposit:
                state = transition_deposit(
                            state, *action.account_id, action.amount,
                            *action.intent_account, time)
                            .state;
                break;
            case ActionKind::withdraw:
                state = transition_withdraw(
                    state, *action.intent_account, action.amount, time);
                break;
            case ActionKind::claim:
                state = transition_claim(state, *action.intent_account, time);
                break;
            case ActionKind::claim_individual:
                state = transition_claim_individual_vesting(
                    state, *action.intent_account, time);
                break;
            case ActionKind::distribute:
                state = transition_distribute_tokens(state, time);
                break;
            }
        }
        catch (Error const &) {
            // rejected actions stay in the scenario
        }
        scenario.actions.push_back(std::move(action));
    }
    return scenario;
}

} // namespace launchpad::harness
