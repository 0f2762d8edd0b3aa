#include "support.hpp"

#include <launchpad/deposit.hpp>
#include <launchpad/harness/oracle.hpp>

using namespace test;
namespace oracle = launchpad::harness::oracle;

namespace
{
void check_against_oracle(Config const &c, Nat a, Nat deposited, Nat sold, Nat t)
{
    auto const got = deposit_spec(c, a, deposited, sold, t);
    auto const want = oracle::deposit(c, a, deposited, sold, t);
    CHECK(oracle::big(got.new_amount) == want.new_amount);
    CHECK(oracle::big(got.weight_added) == want.weight_added);
    CHECK(oracle::big(got.new_total_deposited) == want.new_total_deposited);
    CHECK(oracle::big(got.new_total_sold) == want.new_total_sold);
    CHECK(oracle::big(got.refund) == want.refund);
}
} // namespace

TEST_CASE("refund")
{
    Config const c = fixed_price_config(1, 1, 100);
    CHECK(calculate_refund_spec(c, 25, 90, 175, {1, 1}) == 15);

    Config const doubled = with_discount(c, 10000);
    CHECK(calculate_refund_spec(doubled, 60, 0, 120, {1, 1}) == 10);

    Config const half = fixed_price_config(1, 2, 10);
    CHECK(calculate_refund_spec(half, 6, 0, 175, {1, 2}) == 1);

    check_against_oracle(c, 25, 0, 90, 175);
    check_against_oracle(doubled, 60, 0, 0, 120);
    check_against_oracle(half, 6, 0, 0, 175);
}

TEST_CASE("fixed-price deposit")
{
    Config const c = fixed_price_config(1, 1, 100);
    CHECK(deposit_fixed_price_spec(c, 25, 7, 0, 150) == DepositOutcome{25, 25, 32, 25, 0});
    CHECK(deposit_fixed_price_spec(c, 25, 7, 90, 150) == DepositOutcome{10, 10, 17, 100, 15});
    CHECK(deposit_fixed_price_spec(c, 25, 7, 75, 150) == DepositOutcome{25, 25, 32, 100, 0});
}

TEST_CASE("price-discovery deposit")
{
    Config const c = price_discovery_config();
    CHECK(deposit_price_discovery_spec(c, 40, 3, 10, 175) == DepositOutcome{40, 40, 43, 50, 0});
    CHECK(
        deposit_price_discovery_spec(with_discount(c, 500), 100, 3, 0, 120) ==
        DepositOutcome{100, 105, 103, 105, 0});
    CHECK(deposit_price_discovery_spec(c, 1, 3, 0, 175) == DepositOutcome{1, 1, 4, 1, 0});
    check_against_oracle(with_discount(c, 500), 100, 3, 0, 120);
}

TEST_CASE("dispatcher")
{
    Config const fp = fixed_price_config(1, 1, 100);
    CHECK(deposit_spec(fp, 25, 0, 90, 150) == deposit_fixed_price_spec(fp, 25, 0, 90, 150));
    Config const pd = price_discovery_config();
    CHECK(deposit_spec(pd, 25, 0, 90, 150) == deposit_price_discovery_spec(pd, 25, 0, 90, 150));
    CHECK_THROWS_AS((void)deposit_spec(fp, 1, 0, 100, 150), Error);
    CHECK_THROWS_AS((void)deposit_spec(fp, 0, 0, 0, 150), Error);
}

TEST_CASE("deposit lemmas")
{
    for (char const *name : {"deposit.refund_safety", "deposit.price_discovery"}) {
        SUBCASE(name)
        {
            run_property(name);
        }
    }
}
