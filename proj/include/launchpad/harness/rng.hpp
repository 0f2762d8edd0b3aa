#pragma once

#include <launchpad/nat.hpp>

#include <cstdint>
#include <random>

namespace launchpad::harness
{

/// Seeded generator with portable range reduction; std::uniform_*
/// distributions differ between standard libraries.
class Rng
{
public:
    explicit Rng(std::uint64_t seed)
        : engine_{seed}
    {
    }

    /// Independent stream for case `index` of a run seeded with `seed`.
    static Rng for_case(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64()
    {
        return engine_();
    }

    Nat next_nat()
    {
        return (Nat{next_u64()} << 64) | next_u64();
    }

    /// Uniform in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

    /// Uniform in [lo, hi] over the full 128-bit range.
    Nat uniform_nat(Nat lo, Nat hi);

    /// Uniform bit width in [0, 128], then a uniform value of that width.
    /// Spreads samples over every magnitude instead of clustering near 2^128.
    Nat log_uniform_nat();

    bool chance(std::uint64_t numerator, std::uint64_t denominator)
    {
        return uniform(1, denominator) <= numerator;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace launchpad::harness
