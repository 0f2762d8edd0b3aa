#include "support.hpp"

#include <launchpad/config.hpp>

using namespace test;

TEST_CASE("minimal fixed-price config is valid")
{
    CHECK(valid_config(fixed_price_config()));
}

TEST_CASE("each clause is reported")
{
    Config c = fixed_price_config();
    c.end_date = c.start_date;
    CHECK(validate_config(c).violated == std::vector{ConfigClause::dates});

    c = fixed_price_config();
    c.total_sale_amount = 999;
    CHECK(validate_config(c).violated == std::vector{ConfigClause::accounting});

    c = fixed_price_config();
    c.mechanic = FixedPrice{{1, 0}};
    CHECK(validate_config(c).violated == std::vector{ConfigClause::mechanics});

    c = fixed_price_config();
    c.vesting = VestingSchedule{.cliff_period = 0, .vesting_period = 0};
    CHECK(validate_config(c).violated == std::vector{ConfigClause::vesting});

    c = fixed_price_config();
    c.discounts = {{100, 150, 1}, {120, 160, 1}};
    CHECK(validate_config(c).violated == std::vector{ConfigClause::discounts});

    c = fixed_price_config();
    c.distribution_proportions.stakeholder_proportions = {
        {IntentAccount("a"), 1, std::nullopt}, {IntentAccount("a"), 1, std::nullopt}};
    c.total_sale_amount += 2;
    CHECK(validate_config(c).violated == std::vector{ConfigClause::stakeholders});

    c.end_date = 0;
    CHECK(validate_config(c).violated.size() == 2);
    CHECK_THROWS_AS(require_valid_config(c), Error);
}

TEST_CASE("identifiers are 1 to 64 bytes")
{
    CHECK_THROWS_AS(IntentAccount(""), Error);
    CHECK_THROWS_AS(IntentAccount(std::string(65, 'x')), Error);
    CHECK(IntentAccount(std::string(64, 'x')).str().size() == 64);
}

TEST_CASE("composite weighting")
{
    Config const plain = fixed_price_config();
    Config const five = with_discount(plain, 500);
    Config const one = with_discount(plain, 1);

    CHECK(calculate_weighted_amount_spec(100, 175, five) == 100);
    CHECK(calculate_weighted_amount_spec(100, 120, five) == 105);
    CHECK(calculate_weighted_amount_spec(1, 120, one) == 1);

    CHECK(calculate_original_amount_spec(105, 120, five) == 100);
    CHECK(calculate_original_amount_spec(77, 175, five) == 77);
    CHECK(calculate_original_amount_spec(1, 120, one) == 0);

    CHECK_THROWS_AS((void)calculate_weighted_amount_spec(0, 120, five), Error);
}

TEST_CASE("stakeholder lookup")
{
    DistributionProportions props{
        IntentAccount("solver"),
        {{IntentAccount("A"), 100, std::nullopt}, {IntentAccount("B"), 200, std::nullopt}}};
    auto const b = get_stakeholder_proportion(props, IntentAccount("B"));
    REQUIRE(b);
    CHECK(b->allocation == 200);
    CHECK_FALSE(get_stakeholder_proportion(props, IntentAccount("C")));
    CHECK_FALSE(get_stakeholder_proportion({IntentAccount("solver"), {}}, IntentAccount("A")));
}

TEST_CASE("config lemmas")
{
    for (char const *name :
         {"config.composite_round_trip", "config.spec_monotonic",
          "config.valid_config_clauses", "config.stakeholder_lookup"}) {
        SUBCASE(name)
        {
            run_property(name);
        }
    }
}
