#pragma once

#include <launchpad/codec.hpp>
#include <launchpad/harness/replay.hpp>
#include <launchpad/harness/scenario.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace launchpad::harness
{

struct FuzzOptions
{
    std::uint64_t seed{0};
    std::uint64_t cases{0};
    unsigned jobs{1};
    std::size_t max_actions{50};
    /// Random (x, y, k) triples compared against the oracle per case.
    std::size_t arithmetic_samples{16};
};

struct FuzzFailure
{
    std::uint64_t case_index;
    std::string invariant;
    /// Set for scenario failures; arithmetic mismatches carry only detail.
    std::optional<Scenario> minimized;
    std::vector<InvariantViolation> violations;
    std::string detail;
};

struct FuzzSummary
{
    std::uint64_t seed{0};
    std::uint64_t cases{0};
    std::uint64_t actions{0};
    std::uint64_t actions_applied{0};
    std::uint64_t refunds{0};
    std::uint64_t arithmetic_samples{0};
    std::uint64_t failing_cases{0};
    std::map<std::string, std::uint64_t> violations_by_invariant;
    std::optional<FuzzFailure> first_failure;

    bool ok() const noexcept
    {
        return failing_cases == 0;
    }
};

/// Deterministic in (seed, cases, max_actions, arithmetic_samples); `jobs`
/// only changes wall time. Requires cases > 0.
FuzzSummary fuzz(FuzzOptions const &options);

/// Shrinks a failing scenario: greedy action deletion, then bisection of
/// each action amount, keeping `invariant` violated at every step.
Scenario minimize(Scenario scenario, std::string const &invariant);

codec::Json encode(FuzzSummary const &summary);

} // namespace launchpad::harness
