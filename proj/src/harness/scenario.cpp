#include <launchpad/harness/scenario.hpp>

namespace launchpad::harness
{

using codec::Json;

namespace
{
    [[noreturn]] void malformed(std::string const &message)
    {
        throw ScenarioError(ScenarioError::Reason::malformed, message);
    }

    ActionKind decode_kind(Json const &value)
    {
        if (value == "deposit") {
            return ActionKind::deposit;
        }
        if (value == "withdraw") {
            return ActionKind::withdraw;
        }
        if (value == "claim") {
            return ActionKind::claim;
        }
        if (value == "claim_individual") {
            return ActionKind::claim_individual;
        }
        if (value == "distribute") {
            return ActionKind::distribute;
        }
        malformed("unknown action kind " + value.dump());
    }

    template <typename Id>
    Id decode_id(Json const &obj, char const *name)
    {
        auto const it = obj.find(name);
        if (it == obj.end() || !it->is_string()) {
            malformed(std::string("action needs string field \"") + name + "\"");
        }
        try {
            return Id(it->get<std::string>());
        }
        catch (Error const &e) {
            malformed(e.what());
        }
    }

    Nat decode_field(Json const &obj, char const *name)
    {
        auto const it = obj.find(name);
        if (it == obj.end()) {
            malformed(std::string("action needs field \"") + name + "\"");
        }
        return codec::decode_nat(*it, name);
    }

    void allow_only(Json const &obj, std::initializer_list<char const *> names)
    {
        for (auto const &[key, _] : obj.items()) {
            bool known = false;
            for (auto const *name : names) {
                known = known || key == name;
            }
            if (!known) {
                malformed("unknown field \"" + key + "\" in action");
            }
        }
    }

    Action decode_action(Json const &json)
    {
        if (!json.is_object()) {
            malformed("action must be a JSON object");
        }
        Action action;
        action.time = decode_field(json, "time");
        auto const kind = json.find("kind");
        if (kind == json.end()) {
            malformed("action needs field \"kind\"");
        }
        action.kind = decode_kind(*kind);
        switch (action.kind) {
        case ActionKind::deposit:
            allow_only(
                json, {"time", "kind", "account_id", "intent_account", "amount"});
            action.account_id = decode_id<AccountId>(json, "account_id");
            action.intent_account =
                decode_id<IntentAccount>(json, "intent_account");
            action.amount = decode_field(json, "amount");
            break;
        case ActionKind::withdraw:
            allow_only(json, {"time", "kind", "intent_account", "amount"});
            action.intent_account =
                decode_id<IntentAccount>(json, "intent_account");
            action.amount = decode_field(json, "amount");
            break;
        case ActionKind::claim:
        case ActionKind::claim_individual:
            allow_only(json, {"time", "kind", "intent_account"});
            action.intent_account =
                decode_id<IntentAccount>(json, "intent_account");
            break;
        case ActionKind::distribute:
            allow_only(json, {"time", "kind"});
            break;
        }
        return action;
    }

    bool decode_flag(Json const &json, char const *name, bool fallback)
    {
        auto const it = json.find(name);
        if (it == json.end()) {
            return fallback;
        }
        if (!it->is_boolean()) {
            malformed(std::string("field \"") + name + "\" must be a boolean");
        }
        return it->get<bool>();
    }
}

std::string_view to_string(ActionKind kind) noexcept
{
    switch (kind) {
    case ActionKind::deposit:
        return "deposit";
    case ActionKind::withdraw:
        return "withdraw";
    case ActionKind::claim:
        return "claim";
    case ActionKind::claim_individual:
        return "claim_individual";
    case ActionKind::distribute:
        return "distribute";
    }
    return "unknown";
}

Scenario decode_scenario(Json const &json)
{
    if (!json.is_object()) {
        malformed("scenario must be a JSON object");
    }
    for (auto const &[key, _] : json.items()) {
        if (key != "config" && key != "actions" && key != "is_sale_token_set" &&
            key != "is_locked") {
            malformed("unknown field \"" + key + "\" in scenario");
        }
    }
    auto const config_it = json.find("config");
    if (config_it == json.end()) {
        malformed("missing field \"config\"");
    }

    Scenario scenario{.config = [&] {
        try {
            return codec::decode_config(*config_it);
        }
        catch (ScenarioError const &) {
            throw;
        }
        catch (Error const &e) {
            malformed(e.what());
        }
    }()};

    auto const validation = validate_config(scenario.config);
    if (!validation.ok()) {
        std::vector<std::string> clauses;
        for (auto const clause : validation.violated) {
            clauses.emplace_back(to_string(clause));
        }
        throw ScenarioError(
            ScenarioError::Reason::invalid_config,
            "invalid config: " + validation.describe(), std::move(clauses));
    }

    scenario.is_sale_token_set = decode_flag(json, "is_sale_token_set", true);
    scenario.is_locked = decode_flag(json, "is_locked", false);

    auto const actions = json.find("actions");
    if (actions == json.end() || !actions->is_array()) {
        malformed("field \"actions\" must be an array");
    }
    for (auto const &a : *actions) {
        try {
            scenario.actions.push_back(decode_action(a));
        }
        catch (ScenarioError const &) {
            throw;
        }
        catch (Error const &e) {
            malformed(e.what());
        }
    }
    for (std::size_t i = 1; i < scenario.actions.size(); ++i) {
        if (scenario.actions[i].time < scenario.actions[i - 1].time) {
            throw ScenarioError(
                ScenarioError::Reason::unsorted_actions,
                "unsorted actions: action " + std::to_string(i) +
                    " is earlier than action " + std::to_string(i - 1));
        }
    }
    return scenario;
}

Scenario load_scenario(std::string_view bytes)
{
    Json json;
    try {
        json = Json::parse(bytes.begin(), bytes.end());
    }
    catch (Json::parse_error const &e) {
        malformed(std::string("malformed JSON: ") + e.what());
    }
    return decode_scenario(json);
}

Json encode(Scenario const &scenario)
{
    Json actions = Json::array();
    for (auto const &a : scenario.actions) {
        Json entry{
            {"time", codec::encode_nat(a.time)},
            {"kind", std::string(to_string(a.kind))},
        };
        if (a.account_id) {
            entry["account_id"] = a.account_id->str();
        }
        if (a.intent_account) {
            entry["intent_account"] = a.intent_account->str();
        }
        if (a.kind == ActionKind::deposit || a.kind == ActionKind::withdraw) {
            entry["amount"] = codec::encode_nat(a.amount);
        }
        actions.push_back(std::move(entry));
    }
    return Json{
        {"config", codec::encode(scenario.config)},
        {"is_sale_token_set", scenario.is_sale_token_set},
        {"is_locked", scenario.is_locked},
        {"actions", actions},
    };
}

ContractState initial_state(Scenario const &scenario)
{
    ContractState state = make_initialized_state(scenario.config);
    state.is_sale_token_set = scenario.is_sale_token_set;
    state.is_locked = scenario.is_locked;
    return state;
}

} // namespace launchpad::harness
