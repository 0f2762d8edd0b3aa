#include <launchpad/assets.hpp>
#include <launchpad/claim.hpp>
#include <launchpad/harness/oracle.hpp>
#include <launchpad/harness/replay.hpp>

#include <set>

namespace launchpad::harness
{

using codec::Json;
using oracle::Big;
using launchpad::to_string;

namespace
{
    std::string str(Big const &v)
    {
        return v.str();
    }

    bool is_terminal(SaleStatus s)
    {
        return s == SaleStatus::success || s == SaleStatus::failed ||
               s == SaleStatus::locked;
    }

    class Checker
    {
    public:
        explicit Checker(std::vector<InvariantViolation> &out, std::size_t index)
            : out_{out}
            , index_{index}
        {
        }

        void expect(bool holds, char const *invariant, std::string detail)
        {
            if (!holds) {
                out_.push_back({invariant, index_, std::move(detail)});
            }
        }

    private:
        std::vector<InvariantViolation> &out_;
        std::size_t index_;
    };

    // Checks one applied deposit against the rational oracle and the deposit
    // theorems; returns the fixed-price round-trip loss.
    std::optional<Nat> check_deposit(
        ContractState const &before, Action const &action,
        DepositOutcome const &outcome, Checker &check)
    {
        Config const &config = before.config;
        Big const amount = oracle::big(action.amount);
        auto const expected = oracle::deposit(
            config, amount, oracle::big(before.total_deposited),
            oracle::big(before.total_sold_tokens), action.time);

        check.expect(
            outcome.refund <= action.amount, "refund_safety",
            "refund " + to_string(outcome.refund) + " exceeds deposit " +
                to_string(action.amount));
        check.expect(
            oracle::big(outcome.refund) == expected.refund, "refund_safety",
            "refund " + to_string(outcome.refund) + " differs from oracle " +
                str(expected.refund));
        check.expect(
            oracle::big(outcome.new_amount) == expected.new_amount &&
                oracle::big(outcome.weight_added) == expected.weight_added &&
                oracle::big(outcome.new_total_deposited) ==
                    expected.new_total_deposited &&
                oracle::big(outcome.new_total_sold) == expected.new_total_sold,
            "oracle_agreement",
            "deposit outcome differs from rational oracle");
        check.expect(
            oracle::big(outcome.new_total_deposited) ==
                    oracle::big(before.total_deposited) +
                        oracle::big(outcome.new_amount) &&
                oracle::big(outcome.new_total_sold) ==
                    oracle::big(before.total_sold_tokens) +
                        oracle::big(outcome.weight_added),
            "deposit_totals", "new totals do not add up");

        if (!config.is_fixed_price()) {
            check.expect(
                outcome.refund == 0, "refund_safety",
                "price-discovery deposit produced a refund");
            return std::nullopt;
        }

        check.expect(
            oracle::big(outcome.new_amount) + oracle::big(outcome.refund) ==
                amount,
            "amount_conservation",
            "new_amount + refund = " +
                str(oracle::big(outcome.new_amount) +
                    oracle::big(outcome.refund)) +
                " but deposit was " + to_string(action.amount));
        check.expect(
            outcome.new_total_sold <= config.sale_amount, "sale_cap",
            "total sold " + to_string(outcome.new_total_sold) +
                " above sale amount");

        auto const &price = config.fixed_price();
        Nat const weight =
            calculate_weighted_amount_spec(action.amount, action.time, config);
        auto const rt = round_trip_remainders(weight, price);
        Big const loss = oracle::big(weight) - oracle::big(rt.reverted);
        Big const scaled = loss * oracle::big(price.sale_token_amount);
        check.expect(
            scaled == oracle::big(rt.rem1) + oracle::big(rt.rem2),
            "round_trip_loss_equation",
            "(w - reverted) * sT = " + str(scaled) + " but rem1 + rem2 = " +
                str(oracle::big(rt.rem1) + oracle::big(rt.rem2)));
        if (weight > 0 && rt.assets > 0) {
            check.expect(
                scaled < oracle::big(price.deposit_token_amount) +
                             oracle::big(price.sale_token_amount),
                "round_trip_bound",
                "round-trip loss " + str(loss) + " exceeds bound");
        }
        return oracle::narrow(loss);
    }

    void check_withdraw(
        ContractState const &before, ContractState const &after,
        Action const &action, Checker &check)
    {
        auto const &old_inv = before.investments.at(*action.intent_account);
        auto const &new_inv = after.investments.at(*action.intent_account);
        check.expect(
            new_inv.weight <= old_inv.weight, "withdraw_weight",
            "weight increased on withdrawal");
        check.expect(
            new_inv.claimed == old_inv.claimed, "withdraw_claimed",
            "claimed changed on withdrawal");
        check.expect(
            oracle::big(before.total_sold_tokens) -
                    oracle::big(after.total_sold_tokens) ==
                oracle::big(old_inv.weight) - oracle::big(new_inv.weight),
            "withdraw_sold_accounting",
            "sold reduction differs from weight reduction");
    }

    Json encode_outcome(ActionOutcome const &o)
    {
        Json out{
            {"index", o.index},
            {"time", codec::encode_nat(o.time)},
            {"kind", std::string(to_string(o.kind))},
            {"status", std::string(to_string(o.status))},
            {"result", o.applied ? "applied" : "rejected"},
        };
        if (o.error_kind) {
            out["error"] = Json{
                {"kind", std::string(to_string(*o.error_kind))},
                {"message", o.error_message},
            };
        }
        if (o.deposit) {
            out["deposit"] = codec::encode(*o.deposit);
        }
        if (o.round_trip_loss) {
            out["round_trip_loss"] = codec::encode_nat(*o.round_trip_loss);
        }
        if (o.claimed) {
            out["claimed"] = codec::encode_nat(*o.claimed);
        }
        return out;
    }
}

std::vector<InvariantViolation> check_state_invariants(
    ContractState const &state, Nat time, std::size_t action_index)
{
    std::vector<InvariantViolation> out;
    Checker check(out, action_index);

    Big deposited = 0;
    Big weight = 0;
    for (auto const &[_, inv] : state.investments) {
        deposited += oracle::big(inv.amount);
        weight += oracle::big(inv.weight);
    }
    check.expect(
        deposited == oracle::big(state.total_deposited), "ledger_coherence",
        "total_deposited " + to_string(state.total_deposited) +
            " but investments sum to " + str(deposited));
    check.expect(
        weight == oracle::big(state.total_sold_tokens), "ledger_coherence",
        "total_sold_tokens " + to_string(state.total_sold_tokens) +
            " but weights sum to " + str(weight));
    check.expect(
        state.participants_count == state.investments.size(),
        "participants_count",
        "participants_count " + to_string(state.participants_count) +
            " but " + std::to_string(state.investments.size()) +
            " investors recorded");

    if (state.config.is_fixed_price()) {
        check.expect(
            state.total_sold_tokens <= state.config.sale_amount, "sale_cap",
            "total sold above sale amount");
    }

    bool const success = get_status(state, time) == SaleStatus::success;
    for (auto const &[intent, inv] : state.investments) {
        if (!success) {
            check.expect(
                inv.claimed == 0, "claim_bound",
                intent.str() + " has claims outside a successful sale");
            continue;
        }
        Nat entitled = 0;
        try {
            entitled = available_for_claim_spec(
                inv, state.total_sold_tokens, state.config, time);
        }
        catch (Error const &) {
            entitled = 0;
        }
        check.expect(
            inv.claimed <= entitled, "claim_bound",
            intent.str() + " claimed " + to_string(inv.claimed) +
                " above entitlement " + to_string(entitled));
    }
    for (auto const &[intent, claimed] : state.individual_vesting_claimed) {
        auto const proportion = get_stakeholder_proportion(
            state.config.distribution_proportions, intent);
        Nat const entitled =
            success && proportion
                ? available_for_individual_vesting_claim_spec(
                      *proportion, state.config, time)
                : 0;
        check.expect(
            claimed <= entitled, "individual_claim_bound",
            intent.str() + " claimed " + to_string(claimed) +
                " above entitlement " + to_string(entitled));
    }

    std::set<IntentAccount> eligible{
        state.config.distribution_proportions.solver_account};
    for (auto const &p :
         state.config.distribution_proportions.stakeholder_proportions) {
        eligible.insert(p.account);
    }
    std::set<IntentAccount> seen;
    for (auto const &account : state.distributed_accounts) {
        check.expect(
            seen.insert(account).second, "distribution_unique",
            account.str() + " distributed twice");
        check.expect(
            eligible.contains(account), "distribution_unique",
            account.str() + " is not a stakeholder");
    }
    return out;
}

ReplayReport replay(Scenario const &scenario, ReplayOptions const &options)
{
    ReplayReport report{.final_state = initial_state(scenario)};
    ContractState &state = report.final_state;

    std::optional<SaleStatus> previous_status;
    for (std::size_t i = 0; i < scenario.actions.size(); ++i) {
        Action const &action = scenario.actions[i];
        ActionOutcome outcome{
            .index = i,
            .time = action.time,
            .kind = action.kind,
            .status = get_status(state, action.time),
            .applied = false,
            .error_kind = std::nullopt,
            .error_message = {},
        };
        Checker check(report.invariant_violations, i);

        try {
            switch (action.kind) {
            case ActionKind::deposit: {
                auto result = transition_deposit(
                    state, *action.account_id, action.amount,
                    *action.intent_account, action.time);
                outcome.deposit = result.outcome;
                if (options.check_invariants) {
                    outcome.round_trip_loss =
                        check_deposit(state, action, result.outcome, check);
                }
                else if (state.config.is_fixed_price()) {
                    Nat const weight = calculate_weighted_amount_spec(
                        action.amount, action.time, state.config);
                    auto const rt = round_trip_remainders(
                        weight, state.config.fixed_price());
                    outcome.round_trip_loss = weight - rt.reverted;
                }
                state = std::move(result.state);
                break;
            }
            case ActionKind::withdraw: {
                auto next = transition_withdraw(
                    state, *action.intent_account, action.amount, action.time);
                if (options.check_invariants) {
                    check_withdraw(state, next, action, check);
                }
                state = std::move(next);
                break;
            }
            case ActionKind::claim:
                state = transition_claim(state, *action.intent_account, action.time);
                outcome.claimed = state.investments.at(*action.intent_account).claimed;
                break;
            case ActionKind::claim_individual:
                state = transition_claim_individual_vesting(
                    state, *action.intent_account, action.time);
                outcome.claimed =
                    state.individual_vesting_claimed.at(*action.intent_account);
                break;
            case ActionKind::distribute:
                state = transition_distribute_tokens(state, action.time);
                break;
            }
            outcome.applied = true;
        }
        catch (Error const &e) {
            outcome.error_kind = e.kind();
            outcome.error_message = e.what();
        }

        if (outcome.round_trip_loss) {
            report.round_trip_losses.push_back(*outcome.round_trip_loss);
        }

        if (options.check_invariants) {
            auto state_violations =
                check_state_invariants(state, action.time, i);
            report.invariant_violations.insert(
                report.invariant_violations.end(), state_violations.begin(),
                state_violations.end());

            SaleStatus const now = get_status(state, action.time);
            if (previous_status && is_terminal(*previous_status)) {
                check.expect(
                    now == *previous_status, "terminal_status",
                    "status moved from " +
                        std::string(to_string(*previous_status)) + " to " +
                        std::string(to_string(now)));
            }
            previous_status = now;
        }
        report.outcomes.push_back(std::move(outcome));
    }
    return report;
}

Json encode(ReplayReport const &report)
{
    Json outcomes = Json::array();
    for (auto const &o : report.outcomes) {
        outcomes.push_back(encode_outcome(o));
    }
    Json violations = Json::array();
    for (auto const &v : report.invariant_violations) {
        violations.push_back({
            {"invariant", v.invariant},
            {"action_index", v.action_index},
            {"detail", v.detail},
        });
    }
    Json losses = Json::array();
    for (auto const loss : report.round_trip_losses) {
        losses.push_back(codec::encode_nat(loss));
    }
    return Json{
        {"final_state", codec::encode(report.final_state)},
        {"outcomes", outcomes},
        {"invariant_violations", violations},
        {"round_trip_losses", losses},
    };
}

} // namespace launchpad::harness
