#include "support.hpp"

#include <launchpad/discounts.hpp>

#include <vector>

using namespace test;

TEST_CASE("half-open activity window")
{
    Discount const d{10, 20, 500};
    CHECK(is_active(d, 10));
    CHECK_FALSE(is_active(d, 20));
    CHECK(is_active(d, 15));
    CHECK_FALSE(is_active(d, 9));
}

TEST_CASE("weighted and original amounts")
{
    CHECK(calculate_weighted_amount(100, 500) == 105);
    CHECK(calculate_weighted_amount(10, 10000) == 20);
    CHECK(calculate_weighted_amount(1, 1) == 1);

    CHECK(calculate_original_amount(105, 500) == 100);
    CHECK(calculate_original_amount(20, 10000) == 10);
    CHECK(calculate_original_amount(1, 1) == 0);
}

TEST_CASE("percentage and amount preconditions")
{
    CHECK_THROWS_AS((void)calculate_weighted_amount(0, 500), Error);
    CHECK_THROWS_AS((void)calculate_weighted_amount(1, 0), Error);
    CHECK_THROWS_AS((void)calculate_weighted_amount(1, 10001), Error);
    CHECK_THROWS_AS((void)calculate_original_amount(0, 1), Error);
}

TEST_CASE("overlap detection")
{
    std::vector<Discount> touching{{10, 20, 1}, {20, 30, 1}};
    std::vector<Discount> overlapping{{10, 20, 1}, {15, 30, 1}};
    std::vector<Discount> nested_later{{0, 100, 1}, {10, 20, 1}, {30, 40, 1}};
    CHECK(discounts_do_not_overlap(touching));
    CHECK_FALSE(discounts_do_not_overlap(overlapping));
    CHECK_FALSE(discounts_do_not_overlap(nested_later));
    CHECK(discounts_do_not_overlap({}));
}

TEST_CASE("find_active_discount")
{
    std::vector<Discount> const ds{{10, 20, 500}, {20, 30, 300}};
    CHECK(find_active_discount(ds, 25) == Discount{20, 30, 300});
    std::vector<Discount> const one{{10, 20, 500}};
    CHECK(find_active_discount(one, 5) == std::nullopt);
    CHECK(find_active_discount({}, 99) == std::nullopt);
}

TEST_CASE("discount lemmas")
{
    for (char const *name :
         {"discounts.weighting_bounds", "discounts.primitive_round_trip",
          "discounts.unique_active"}) {
        SUBCASE(name)
        {
            run_property(name);
        }
    }
}
