#include <launchpad/codec.hpp>

#include <initializer_list>
#include <string_view>

namespace launchpad::codec
{

namespace
{
    [[noreturn]] void parse_error(std::string const &message)
    {
        fail(ErrorKind::parse, message);
    }

    Json const &field(Json const &obj, char const *name)
    {
        auto const it = obj.find(name);
        if (it == obj.end()) {
            parse_error(std::string("missing field \"") + name + "\"");
        }
        return *it;
    }

    void expect_object(
        Json const &obj, char const *what,
        std::initializer_list<std::string_view> allowed)
    {
        if (!obj.is_object()) {
            parse_error(std::string(what) + " must be a JSON object");
        }
        for (auto const &[key, _] : obj.items()) {
            bool known = false;
            for (auto const name : allowed) {
                known = known || key == name;
            }
            if (!known) {
                parse_error(
                    "unknown field \"" + key + "\" in " + std::string(what));
            }
        }
    }

    template <typename Id>
    Id decode_id(Json const &value, char const *name)
    {
        if (!value.is_string()) {
            parse_error(std::string("field \"") + name + "\" must be a string");
        }
        try {
            return Id(value.get<std::string>());
        }
        catch (Error const &e) {
            parse_error(e.what());
        }
    }

    Json encode_vesting(std::optional<VestingSchedule> const &v)
    {
        if (!v) {
            return nullptr;
        }
        return Json{
            {"cliff_period", encode_nat(v->cliff_period)},
            {"vesting_period", encode_nat(v->vesting_period)},
        };
    }

    std::optional<VestingSchedule> decode_vesting(Json const &json)
    {
        if (json.is_null()) {
            return std::nullopt;
        }
        expect_object(json, "vesting", {"cliff_period", "vesting_period"});
        return VestingSchedule{
            .cliff_period =
                decode_nat(field(json, "cliff_period"), "cliff_period"),
            .vesting_period =
                decode_nat(field(json, "vesting_period"), "vesting_period"),
        };
    }

    std::optional<VestingSchedule>
    decode_optional_vesting(Json const &obj, char const *name)
    {
        auto const it = obj.find(name);
        if (it == obj.end()) {
            return std::nullopt;
        }
        return decode_vesting(*it);
    }

    Json encode_mechanic(Mechanic const &mechanic)
    {
        if (auto const *fp = std::get_if<FixedPrice>(&mechanic)) {
            return Json{
                {"type", "fixed_price"},
                {"deposit_token_amount",
                 encode_nat(fp->price.deposit_token_amount)},
                {"sale_token_amount", encode_nat(fp->price.sale_token_amount)},
            };
        }
        return Json{{"type", "price_discovery"}};
    }

    Mechanic decode_mechanic(Json const &json)
    {
        if (!json.is_object()) {
            parse_error("mechanic must be a JSON object");
        }
        auto const &type = field(json, "type");
        if (type == "fixed_price") {
            expect_object(
                json, "mechanic",
                {"type", "deposit_token_amount", "sale_token_amount"});
            return FixedPrice{PriceFraction{
                .deposit_token_amount = decode_nat(
                    field(json, "deposit_token_amount"),
                    "deposit_token_amount"),
                .sale_token_amount = decode_nat(
                    field(json, "sale_token_amount"), "sale_token_amount"),
            }};
        }
        if (type == "price_discovery") {
            expect_object(json, "mechanic", {"type"});
            return PriceDiscovery{};
        }
        parse_error("mechanic type must be \"fixed_price\" or \"price_discovery\"");
    }

    Json const &array_field(Json const &obj, char const *name)
    {
        auto const &value = field(obj, name);
        if (!value.is_array()) {
            parse_error(std::string("field \"") + name + "\" must be an array");
        }
        return value;
    }

    Json const &object_field(Json const &obj, char const *name)
    {
        auto const &value = field(obj, name);
        if (!value.is_object()) {
            parse_error(std::string("field \"") + name + "\" must be an object");
        }
        return value;
    }

    bool decode_bool(Json const &value, char const *name)
    {
        if (!value.is_boolean()) {
            parse_error(std::string("field \"") + name + "\" must be a boolean");
        }
        return value.get<bool>();
    }
}

Json encode_nat(Nat value)
{
    return to_string(value);
}

Nat decode_nat(Json const &value, char const *name)
{
    if (!value.is_string()) {
        parse_error(
            std::string("field \"") + name +
            "\" must be a decimal string integer");
    }
    try {
        return parse_nat(value.get_ref<std::string const &>());
    }
    catch (Error const &e) {
        parse_error(std::string("field \"") + name + "\": " + e.what());
    }
}

Json encode(Config const &config)
{
    Json discounts = Json::array();
    for (auto const &d : config.discounts) {
        discounts.push_back({
            {"start_date", encode_nat(d.start_date)},
            {"end_date", encode_nat(d.end_date)},
            {"percentage", encode_nat(d.percentage)},
        });
    }
    Json stakeholders = Json::array();
    for (auto const &p : config.distribution_proportions.stakeholder_proportions) {
        stakeholders.push_back({
            {"account", p.account.str()},
            {"allocation", encode_nat(p.allocation)},
            {"vesting", encode_vesting(p.vesting)},
        });
    }
    return Json{
        {"start_date", encode_nat(config.start_date)},
        {"end_date", encode_nat(config.end_date)},
        {"mechanic", encode_mechanic(config.mechanic)},
        {"sale_amount", encode_nat(config.sale_amount)},
        {"total_sale_amount", encode_nat(config.total_sale_amount)},
        {"soft_cap", encode_nat(config.soft_cap)},
        {"discounts", discounts},
        {"vesting", encode_vesting(config.vesting)},
        {"distribution_proportions",
         {
             {"solver_account",
              config.distribution_proportions.solver_account.str()},
             {"stakeholder_proportions", stakeholders},
         }},
    };
}

Config decode_config(Json const &json)
{
    expect_object(
        json, "config",
        {"start_date", "end_date", "mechanic", "sale_amount",
         "total_sale_amount", "soft_cap", "discounts", "vesting",
         "distribution_proportions"});

    std::vector<Discount> discounts;
    for (auto const &d : array_field(json, "discounts")) {
        expect_object(d, "discount", {"start_date", "end_date", "percentage"});
        discounts.push_back(Discount{
            .start_date = decode_nat(field(d, "start_date"), "start_date"),
            .end_date = decode_nat(field(d, "end_date"), "end_date"),
            .percentage = decode_nat(field(d, "percentage"), "percentage"),
        });
    }

    auto const &dp = field(json, "distribution_proportions");
    expect_object(
        dp, "distribution_proportions",
        {"solver_account", "stakeholder_proportions"});
    std::vector<StakeholderProportion> stakeholders;
    for (auto const &p : array_field(dp, "stakeholder_proportions")) {
        expect_object(p, "stakeholder proportion", {"account", "allocation", "vesting"});
        stakeholders.push_back(StakeholderProportion{
            .account = decode_id<IntentAccount>(field(p, "account"), "account"),
            .allocation = decode_nat(field(p, "allocation"), "allocation"),
            .vesting = decode_optional_vesting(p, "vesting"),
        });
    }

    return Config{
        .start_date = decode_nat(field(json, "start_date"), "start_date"),
        .end_date = decode_nat(field(json, "end_date"), "end_date"),
        .mechanic = decode_mechanic(field(json, "mechanic")),
        .sale_amount = decode_nat(field(json, "sale_amount"), "sale_amount"),
        .total_sale_amount =
            decode_nat(field(json, "total_sale_amount"), "total_sale_amount"),
        .soft_cap = decode_nat(field(json, "soft_cap"), "soft_cap"),
        .discounts = std::move(discounts),
        .vesting = decode_optional_vesting(json, "vesting"),
        .distribution_proportions =
            DistributionProportions{
                .solver_account = decode_id<IntentAccount>(
                    field(dp, "solver_account"), "solver_account"),
                .stakeholder_proportions = std::move(stakeholders),
            },
    };
}

Json encode(InvestmentAmount const &investment)
{
    return Json{
        {"amount", encode_nat(investment.amount)},
        {"weight", encode_nat(investment.weight)},
        {"claimed", encode_nat(investment.claimed)},
    };
}

Json encode(DepositOutcome const &outcome)
{
    return Json{
        {"new_amount", encode_nat(outcome.new_amount)},
        {"weight_added", encode_nat(outcome.weight_added)},
        {"new_total_deposited", encode_nat(outcome.new_total_deposited)},
        {"new_total_sold", encode_nat(outcome.new_total_sold)},
        {"refund", encode_nat(outcome.refund)},
    };
}

Json encode(ContractState const &state)
{
    Json accounts = Json::object();
    for (auto const &[id, intent] : state.accounts) {
        accounts[id.str()] = intent.str();
    }
    Json investments = Json::object();
    for (auto const &[intent, inv] : state.investments) {
        investments[intent.str()] = encode(inv);
    }
    Json distributed = Json::array();
    for (auto const &account : state.distributed_accounts) {
        distributed.push_back(account.str());
    }
    Json individual = Json::object();
    for (auto const &[intent, claimed] : state.individual_vesting_claimed) {
        individual[intent.str()] = encode_nat(claimed);
    }
    return Json{
        {"config", encode(state.config)},
        {"total_deposited", encode_nat(state.total_deposited)},
        {"total_sold_tokens", encode_nat(state.total_sold_tokens)},
        {"is_sale_token_set", state.is_sale_token_set},
        {"is_locked", state.is_locked},
        {"accounts", accounts},
        {"participants_count", encode_nat(state.participants_count)},
        {"investments", investments},
        {"distributed_accounts", distributed},
        {"individual_vesting_claimed", individual},
    };
}

ContractState decode_state(Json const &json)
{
    expect_object(
        json, "state",
        {"config", "total_deposited", "total_sold_tokens", "is_sale_token_set",
         "is_locked", "accounts", "participants_count", "investments",
         "distributed_accounts", "individual_vesting_claimed"});

    ContractState state{.config = decode_config(field(json, "config"))};
    state.total_deposited =
        decode_nat(field(json, "total_deposited"), "total_deposited");
    state.total_sold_tokens =
        decode_nat(field(json, "total_sold_tokens"), "total_sold_tokens");
    state.is_sale_token_set =
        decode_bool(field(json, "is_sale_token_set"), "is_sale_token_set");
    state.is_locked = decode_bool(field(json, "is_locked"), "is_locked");
    state.participants_count =
        decode_nat(field(json, "participants_count"), "participants_count");

    for (auto const &[id, intent] : object_field(json, "accounts").items()) {
        state.accounts.emplace(
            decode_id<AccountId>(Json(id), "accounts"),
            decode_id<IntentAccount>(intent, "accounts"));
    }
    for (auto const &[intent, inv] : object_field(json, "investments").items()) {
        expect_object(inv, "investment", {"amount", "weight", "claimed"});
        state.investments.emplace(
            decode_id<IntentAccount>(Json(intent), "investments"),
            InvestmentAmount{
                .amount = decode_nat(field(inv, "amount"), "amount"),
                .weight = decode_nat(field(inv, "weight"), "weight"),
                .claimed = decode_nat(field(inv, "claimed"), "claimed"),
            });
    }
    for (auto const &account : array_field(json, "distributed_accounts")) {
        state.distributed_accounts.push_back(
            decode_id<IntentAccount>(account, "distributed_accounts"));
    }
    for (auto const &[intent, claimed] :
         object_field(json, "individual_vesting_claimed").items()) {
        state.individual_vesting_claimed.emplace(
            decode_id<IntentAccount>(Json(intent), "individual_vesting_claimed"),
            decode_nat(claimed, "individual_vesting_claimed"));
    }
    return state;
}

std::string dump(Json const &json)
{
    return json.dump(2) + "\n";
}

} // namespace launchpad::codec
