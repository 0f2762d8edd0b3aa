#pragma once

#include <launchpad/config.hpp>

#include <span>
#include <vector>

namespace launchpad
{

/// Accounts in payout order.
using DistributionQueue = std::vector<IntentAccount>;

/// Stakeholder accounts not yet in `distributed`, in configuration order.
/// Unknown entries in `distributed` are ignored.
DistributionQueue filter_distributed_stakeholders(
    std::span<StakeholderProportion const> proportions,
    std::span<IntentAccount const> distributed);

/// Pending payouts with the solver at the head while it is unpaid.
DistributionQueue get_filtered_distributions_spec(
    Config const &config, std::span<IntentAccount const> distributed);

} // namespace launchpad
