#include "support.hpp"

#include <launchpad/codec.hpp>
#include <launchpad/harness/generate.hpp>
#include <launchpad/harness/rng.hpp>
#include <launchpad/launchpad.hpp>

using namespace test;
using codec::Json;

TEST_CASE("naturals are decimal strings")
{
    CHECK(codec::encode_nat(0) == Json("0"));
    CHECK(codec::encode_nat(kNatMax) == Json("340282366920938463463374607431768211455"));
    CHECK(codec::decode_nat(Json("340282366920938463463374607431768211455"), "x") == kNatMax);
    for (char const *bad : {"", "-1", "01", "1.0", " 1", "340282366920938463463374607431768211456"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS((void)codec::decode_nat(Json(bad), "x"), Error);
    }
    CHECK_THROWS_AS((void)codec::decode_nat(Json(7), "x"), Error);
}

TEST_CASE("parse_nat")
{
    CHECK(parse_nat("0") == 0);
    CHECK(parse_nat("18446744073709551616") == (Nat{1} << 64));
    CHECK_THROWS_AS((void)parse_nat("00"), Error);
}

TEST_CASE("config round trip")
{
    harness::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Config const c = harness::random_config(rng);
        CHECK(codec::decode_config(codec::encode(c)) == c);
    }
}

TEST_CASE("state round trip")
{
    ContractState s = make_initialized_state(fixed_price_config(1, 1, 100));
    s = transition_deposit(s, AccountId("a"), 25, IntentAccount("u"), 150).state;
    s.distributed_accounts.emplace_back("solver");
    s.individual_vesting_claimed[IntentAccount("t")] = 4;
    CHECK(codec::decode_state(codec::encode(s)) == s);
}

TEST_CASE("unknown fields are rejected")
{
    Json j = codec::encode(fixed_price_config());
    j["surprise"] = 1;
    CHECK_THROWS_AS((void)codec::decode_config(j), Error);
}

TEST_CASE("dump sorts keys and ends with a newline")
{
    std::string const text = codec::dump(Json{{"b", "1"}, {"a", "2"}});
    CHECK(text == "{\n  \"a\": \"2\",\n  \"b\": \"1\"\n}\n");
}
