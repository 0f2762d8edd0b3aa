#include "support.hpp"

#include <launchpad/distribution.hpp>

using namespace test;

namespace
{
std::vector<StakeholderProportion> props(std::initializer_list<char const *> names)
{
    std::vector<StakeholderProportion> out;
    for (auto const *n : names) {
        out.push_back({IntentAccount(n), 1, std::nullopt});
    }
    return out;
}

std::vector<IntentAccount> accounts(std::initializer_list<char const *> names)
{
    std::vector<IntentAccount> out;
    for (auto const *n : names) {
        out.emplace_back(n);
    }
    return out;
}

Config with_stakeholders(std::initializer_list<char const *> names)
{
    Config c = fixed_price_config();
    c.distribution_proportions.solver_account = IntentAccount("S");
    c.distribution_proportions.stakeholder_proportions = props(names);
    c.total_sale_amount += names.size();
    return c;
}
} // namespace

TEST_CASE("filter keeps configuration order")
{
    auto const abc = props({"A", "B", "C"});
    CHECK(filter_distributed_stakeholders(abc, accounts({"B"})) == accounts({"A", "C"}));
    CHECK(filter_distributed_stakeholders(abc, {}) == accounts({"A", "B", "C"}));
    CHECK(filter_distributed_stakeholders(abc, accounts({"A", "B", "C"})).empty());
    CHECK(filter_distributed_stakeholders(abc, accounts({"X", "C", "C"})) == accounts({"A", "B"}));
}

TEST_CASE("solver goes first while unpaid")
{
    CHECK(get_filtered_distributions_spec(with_stakeholders({"A"}), {}) == accounts({"S", "A"}));
    CHECK(
        get_filtered_distributions_spec(with_stakeholders({"A", "B"}), accounts({"S", "A"})) ==
        accounts({"B"}));
    CHECK(get_filtered_distributions_spec(with_stakeholders({}), {}) == accounts({"S"}));
}

TEST_CASE("distribution properties")
{
    for (char const *name : {"distribution.filter", "distribution.solver_priority"}) {
        SUBCASE(name)
        {
            run_property(name);
        }
    }
}
