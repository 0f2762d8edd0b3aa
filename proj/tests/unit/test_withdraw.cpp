#include "support.hpp"

#include <launchpad/withdraw.hpp>

using namespace test;

TEST_CASE("fixed-price withdrawal is all or nothing")
{
    CHECK(withdraw_fixed_price_spec({100, 100, 0}, 100, 500) == WithdrawResult{{0, 0, 0}, 400});
    CHECK(withdraw_fixed_price_spec({50, 55, 7}, 50, 55) == WithdrawResult{{0, 0, 7}, 0});
    CHECK_THROWS_AS((void)withdraw_fixed_price_spec({100, 100, 0}, 40, 500), Error);
}

TEST_CASE("price-discovery withdrawal clamps the weight")
{
    Config const c = price_discovery_config();
    CHECK(
        withdraw_price_discovery_spec(c, {100, 110, 0}, 50, 500, 175) ==
        WithdrawResult{{50, 50, 0}, 440});
    CHECK(
        withdraw_price_discovery_spec(c, {100, 110, 0}, 100, 500, 175) ==
        WithdrawResult{{0, 0, 0}, 390});
    Config const doubled = with_discount(c, 10000);
    CHECK(
        withdraw_price_discovery_spec(doubled, {100, 100, 0}, 10, 500, 120) ==
        WithdrawResult{{90, 100, 0}, 500});
}

TEST_CASE("dispatcher")
{
    Config const fp = fixed_price_config();
    Config const pd = price_discovery_config();
    InvestmentAmount const inv{100, 110, 3};
    CHECK(withdraw_spec(fp, inv, 100, 200, 150) == withdraw_fixed_price_spec(inv, 100, 200));
    CHECK(
        withdraw_spec(pd, inv, 30, 200, 150) ==
        withdraw_price_discovery_spec(pd, inv, 30, 200, 150));
    CHECK_THROWS_AS((void)withdraw_spec(pd, inv, 0, 200, 150), Error);
    CHECK_THROWS_AS((void)withdraw_spec(pd, inv, 101, 200, 150), Error);
}

TEST_CASE("withdraw properties")
{
    run_property("withdraw.properties");
}
