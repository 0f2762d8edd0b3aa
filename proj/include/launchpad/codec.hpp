#pragma once

#include <launchpad/config.hpp>
#include <launchpad/deposit.hpp>
#include <launchpad/launchpad.hpp>

#include <json.hpp>

namespace launchpad::codec
{

// Canonical JSON: integers are decimal strings, map keys sorted, unknown
// fields rejected. Decoding errors throw Error(parse).

using Json = nlohmann::json;

Json encode_nat(Nat value);
Nat decode_nat(Json const &value, char const *field);

Json encode(Config const &config);
Config decode_config(Json const &json);

Json encode(ContractState const &state);
ContractState decode_state(Json const &json);

Json encode(DepositOutcome const &outcome);
Json encode(InvestmentAmount const &investment);

/// Two-space indented dump with a trailing newline.
std::string dump(Json const &json);

} // namespace launchpad::codec
