#pragma once

#include <launchpad/codec.hpp>
#include <launchpad/config.hpp>
#include <launchpad/launchpad.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace launchpad::harness
{

enum class ActionKind
{
    deposit,
    withdraw,
    claim,
    claim_individual,
    distribute,
};

std::string_view to_string(ActionKind kind) noexcept;

struct Action
{
    Nat time{0};
    ActionKind kind{ActionKind::deposit};
    std::optional<AccountId> account_id;        // deposit
    std::optional<IntentAccount> intent_account; // all but distribute
    Nat amount{0};                              // deposit, withdraw

    friend bool operator==(Action const &, Action const &) = default;
};

/// Config plus a time-ordered action list. The flags seed the initial
/// state; both default to an initialized, unlocked contract.
struct Scenario
{
    Config config;
    bool is_sale_token_set{true};
    bool is_locked{false};
    std::vector<Action> actions;

    friend bool operator==(Scenario const &, Scenario const &) = default;
};

class ScenarioError : public Error
{
public:
    enum class Reason
    {
        malformed,
        invalid_config,
        unsorted_actions,
    };

    ScenarioError(
        Reason reason, std::string const &message,
        std::vector<std::string> clauses = {})
        : Error(ErrorKind::parse, message)
        , reason_{reason}
        , clauses_{std::move(clauses)}
    {
    }

    Reason reason() const noexcept
    {
        return reason_;
    }

    /// Violated config clause names for invalid_config.
    std::vector<std::string> const &clauses() const noexcept
    {
        return clauses_;
    }

private:
    Reason reason_;
    std::vector<std::string> clauses_;
};

/// Parses and validates UTF-8 JSON scenario text. Throws ScenarioError.
Scenario load_scenario(std::string_view bytes);

Scenario decode_scenario(codec::Json const &json);
codec::Json encode(Scenario const &scenario);

ContractState initial_state(Scenario const &scenario);

} // namespace launchpad::harness
