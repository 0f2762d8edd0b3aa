#pragma once

#include <launchpad/config.hpp>
#include <launchpad/harness/rng.hpp>
#include <launchpad/harness/scenario.hpp>

#include <cstddef>

namespace launchpad::harness
{

/// Random config satisfying validate_config. Mixes small values that make
/// refunds and truncation common with wide values that need 256-bit
/// intermediates.
Config random_config(Rng &rng);

/// Random scenario with up to `max_actions` time-ordered actions. The
/// generator tracks the contract state while it draws, so withdrawals and
/// claims usually target real balances; some actions are still invalid on
/// purpose.
Scenario random_scenario(Rng &rng, std::size_t max_actions);

} // namespace launchpad::harness
