#include "support.hpp"

#include <launchpad/arith.hpp>
#include <launchpad/harness/oracle.hpp>

using namespace test;
namespace oracle = launchpad::harness::oracle;

namespace
{
Nat oracle_mul_div(Nat x, Nat y, Nat k)
{
    return *oracle::narrow(oracle::mul_div_floor(oracle::big(x), oracle::big(y), oracle::big(k)));
}
} // namespace

TEST_CASE("mul_div_floor worked values")
{
    CHECK(mul_div_floor(5, 3, 2) == 7);
    CHECK(oracle_mul_div(5, 3, 2) == 7);
    CHECK(mul_div_floor(42, 7, 7) == 42);
    CHECK(mul_div_floor(7, 0, 3) == 0);
    CHECK(mul_div_floor(0, 0, 1) == 0);
}

TEST_CASE("mul_div_floor uses a full-width intermediate")
{
    // x*y needs 256 bits but the quotient fits.
    CHECK(mul_div_floor(kNatMax, kNatMax, kNatMax) == kNatMax);
    Nat const half = kNatMax / 2;
    CHECK(mul_div_floor(kNatMax, half, kNatMax) == half);
    CHECK(mul_div_floor(kNatMax, 3, 4) == oracle_mul_div(kNatMax, 3, 4));
}

TEST_CASE("mul_div_floor errors")
{
    auto kind_of = [](auto &&f) {
        try {
            f();
        }
        catch (Error const &e) {
            return e.kind();
        }
        FAIL("no error");
        return ErrorKind::parse;
    };
    CHECK(kind_of([] { (void)mul_div_floor(1, 1, 0); }) == ErrorKind::precondition_violation);
    CHECK(kind_of([] { (void)mul_div_floor(kNatMax, 2, 1); }) == ErrorKind::overflow);
    CHECK(kind_of([] { (void)div_rem(1, 0); }) == ErrorKind::precondition_violation);
}

TEST_CASE("mul_div_rem remainder")
{
    for (Nat const k : {Nat{7}, kNatMax - 1, kNatMax / 3}) {
        Nat const y = k - 1;
        auto const r = mul_div_rem(kNatMax, y, k);
        oracle::Big const num = oracle::big(kNatMax) * oracle::big(y);
        CHECK(oracle::big(r.quotient) == num / oracle::big(k));
        CHECK(oracle::big(r.remainder) == num % oracle::big(k));
    }
}

TEST_CASE("div_rem worked values")
{
    CHECK(div_rem(17, 5) == DivRem{3, 2});
    CHECK(div_rem(0, 9) == DivRem{0, 0});
    CHECK(div_rem(4, 5) == DivRem{0, 4});
}

TEST_CASE("wide multiply and divide round trip")
{
    Wide const w = mul_wide(kNatMax, kNatMax);
    CHECK(w.hi == kNatMax - 1);
    CHECK(w.lo == 1);
    CHECK(div_wide(w, kNatMax) == DivRem{kNatMax, 0});
}

TEST_CASE("arithmetic lemmas")
{
    for (char const *name :
         {"arith.mul_div_oracle", "arith.div_mul_bounds", "arith.div_maintains_gte",
          "arith.div_maintains_gt", "arith.mul_div_greater", "arith.mul_div_strictly_greater",
          "arith.mul_div_less", "arith.mul_div_strictly_less", "arith.div_lower_bound"}) {
        SUBCASE(name)
        {
            run_property(name);
        }
    }
}
