#include <launchpad/distribution.hpp>

#include <set>

namespace launchpad
{

DistributionQueue filter_distributed_stakeholders(
    std::span<StakeholderProportion const> proportions,
    std::span<IntentAccount const> distributed)
{
    std::set<IntentAccount> const paid(distributed.begin(), distributed.end());
    DistributionQueue pending;
    for (auto const &p : proportions) {
        if (!paid.contains(p.account)) {
            pending.push_back(p.account);
        }
    }
    return pending;
}

DistributionQueue get_filtered_distributions_spec(
    Config const &config, std::span<IntentAccount const> distributed)
{
    auto const &props = config.distribution_proportions;
    DistributionQueue rest = filter_distributed_stakeholders(
        props.stakeholder_proportions, distributed);

    bool solver_paid = false;
    for (auto const &account : distributed) {
        if (account == props.solver_account) {
            solver_paid = true;
            break;
        }
    }
    if (solver_paid) {
        return rest;
    }

    DistributionQueue queue;
    queue.reserve(rest.size() + 1);
    queue.push_back(props.solver_account);
    queue.insert(queue.end(), rest.begin(), rest.end());
    return queue;
}

} // namespace launchpad
