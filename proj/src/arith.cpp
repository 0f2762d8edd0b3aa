#include <launchpad/arith.hpp>

#include <cstdint>

namespace launchpad
{

namespace
{
    constexpr Nat low64(Nat v) noexcept
    {
        return static_cast<std::uint64_t>(v);
    }
}

Wide mul_wide(Nat a, Nat b) noexcept
{
    Nat const a0 = low64(a);
    Nat const a1 = a >> 64;
    Nat const b0 = low64(b);
    Nat const b1 = b >> 64;

    Nat const p00 = a0 * b0;
    Nat const p01 = a0 * b1;
    Nat const p10 = a1 * b0;
    Nat const p11 = a1 * b1;

    // at most 3 * (2^64 - 1), no wrap
    Nat const middle = (p00 >> 64) + low64(p01) + low64(p10);

    return Wide{
        .hi = p11 + (p01 >> 64) + (p10 >> 64) + (middle >> 64),
        .lo = (middle << 64) | low64(p00),
    };
}

DivRem div_wide(Wide numerator, Nat divisor)
{
    if (divisor == 0) {
        fail(ErrorKind::precondition_violation, "division by zero");
    }
    if (numerator.hi == 0) {
        return {numerator.lo / divisor, numerator.lo % divisor};
    }
    if (numerator.hi >= divisor) {
        fail(ErrorKind::overflow, "quotient exceeds 128-bit amount range");
    }

    // Restoring division, one numerator bit per step. The running remainder
    // stays below the divisor, so a shifted-out top bit means it already
    // exceeds the divisor.
    Nat rem = numerator.hi;
    Nat quot = 0;
    for (int bit = 127; bit >= 0; --bit) {
        bool const carry = (rem >> 127) != 0;
        rem = (rem << 1) | ((numerator.lo >> bit) & 1);
        quot <<= 1;
        if (carry || rem >= divisor) {
            rem -= divisor;
            quot |= 1;
        }
    }
    return {quot, rem};
}

DivRem mul_div_rem(Nat x, Nat y, Nat k)
{
    if (k == 0) {
        fail(ErrorKind::precondition_violation, "mul_div: zero divisor");
    }
    Nat product;
    if (!__builtin_mul_overflow(x, y, &product)) {
        return {product / k, product % k};
    }
    return div_wide(mul_wide(x, y), k);
}

Nat mul_div_floor(Nat x, Nat y, Nat k)
{
    return mul_div_rem(x, y, k).quotient;
}

DivRem div_rem(Nat x, Nat y)
{
    if (y == 0) {
        fail(ErrorKind::precondition_violation, "div_rem: zero divisor");
    }
    return {x / y, x % y};
}

} // namespace launchpad
