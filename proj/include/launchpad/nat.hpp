#pragma once

#include <launchpad/error.hpp>

#include <string>
#include <string_view>

namespace launchpad
{

/// Non-negative amount in minimal token units, also used for timestamps and
/// durations. 128 bits covers the token ranges of real chains; anything that
/// needs more width goes through the 256-bit paths in arith.hpp.
using Nat = unsigned __int128;

inline constexpr Nat kNatMax = ~Nat{0};

std::string to_string(Nat value);

/// Parses a canonical decimal string: digits only, no sign, no leading zeros
/// (except "0" itself). Throws Error(parse) on anything else or on overflow.
Nat parse_nat(std::string_view text);

inline Nat checked_add(Nat a, Nat b)
{
    Nat out;
    if (__builtin_add_overflow(a, b, &out)) {
        fail(ErrorKind::overflow, "addition exceeds 128-bit amount range");
    }
    return out;
}

inline Nat checked_sub(Nat a, Nat b)
{
    if (b > a) {
        fail(ErrorKind::precondition_violation, "subtraction below zero");
    }
    return a - b;
}

inline Nat checked_mul(Nat a, Nat b)
{
    Nat out;
    if (__builtin_mul_overflow(a, b, &out)) {
        fail(ErrorKind::overflow, "product exceeds 128-bit amount range");
    }
    return out;
}

} // namespace launchpad
