#pragma once

#include <launchpad/nat.hpp>

namespace launchpad
{

struct DivRem
{
    Nat quotient;
    Nat remainder;

    friend bool operator==(DivRem const &, DivRem const &) = default;
};

/// 256-bit unsigned value as two 128-bit halves.
struct Wide
{
    Nat hi;
    Nat lo;

    friend bool operator==(Wide const &, Wide const &) = default;
};

/// Full 128x128 -> 256 bit product.
Wide mul_wide(Nat a, Nat b) noexcept;

/// Divides a 256-bit numerator by a 128-bit divisor. The quotient must fit in
/// 128 bits (numerator.hi < divisor), otherwise Error(overflow).
DivRem div_wide(Wide numerator, Nat divisor);

/// floor(x * y / k) together with (x * y) mod k. The product is exact at 256
/// bits; only a quotient above 128 bits is reported as overflow.
DivRem mul_div_rem(Nat x, Nat y, Nat k);

/// floor(x * y / k); k == 0 is a precondition violation.
Nat mul_div_floor(Nat x, Nat y, Nat k);

/// Euclidean division: x == quotient * y + remainder, remainder < y.
DivRem div_rem(Nat x, Nat y);

} // namespace launchpad
