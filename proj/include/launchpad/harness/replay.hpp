#pragma once

#include <launchpad/codec.hpp>
#include <launchpad/harness/scenario.hpp>
#include <launchpad/launchpad.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace launchpad::harness
{

struct InvariantViolation
{
    std::string invariant;
    std::size_t action_index;
    std::string detail;

    friend bool
    operator==(InvariantViolation const &, InvariantViolation const &) = default;
};

struct ActionOutcome
{
    std::size_t index;
    Nat time;
    ActionKind kind;
    SaleStatus status; // status at `time` before the action
    bool applied;
    std::optional<ErrorKind> error_kind;
    std::string error_message;
    std::optional<DepositOutcome> deposit;
    std::optional<Nat> round_trip_loss;
    std::optional<Nat> claimed; // new claimed total after a claim
};

struct ReplayReport
{
    ContractState final_state;
    std::vector<ActionOutcome> outcomes;
    std::vector<InvariantViolation> invariant_violations;
    std::vector<Nat> round_trip_losses;
};

struct ReplayOptions
{
    bool check_invariants{true};
};

/// Applies every action through the matching transition. Rejected actions
/// leave the state unchanged and are recorded, never thrown. With
/// check_invariants the full invariant suite runs after every action.
ReplayReport replay(Scenario const &scenario, ReplayOptions const &options = {});

/// State-level invariants (ledger coherence, cap, claim bounds, distribution
/// uniqueness) evaluated at `time`.
std::vector<InvariantViolation> check_state_invariants(
    ContractState const &state, Nat time, std::size_t action_index);

codec::Json encode(ReplayReport const &report);

} // namespace launchpad::harness
