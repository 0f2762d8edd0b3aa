#include <launchpad/harness/rng.hpp>

namespace launchpad::harness
{

namespace
{
    std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
}

Rng Rng::for_case(std::uint64_t seed, std::uint64_t index)
{
    return Rng(splitmix64(splitmix64(seed) ^ index));
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi)
{
    std::uint64_t const span = hi - lo;
    if (span == ~std::uint64_t{0}) {
        return next_u64();
    }
    std::uint64_t const range = span + 1;
    std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t draw;
    do {
        draw = next_u64();
    } while (draw >= limit);
    return lo + draw % range;
}

Nat Rng::uniform_nat(Nat lo, Nat hi)
{
    Nat const span = hi - lo;
    if (span == kNatMax) {
        return next_nat();
    }
    Nat const range = span + 1;
    Nat const limit = kNatMax - (kNatMax % range);
    Nat draw;
    do {
        draw = next_nat();
    } while (draw >= limit);
    return lo + draw % range;
}

Nat Rng::log_uniform_nat()
{
    auto const bits = static_cast<unsigned>(uniform(0, 128));
    if (bits == 0) {
        return 0;
    }
    Nat const value = next_nat();
    if (bits == 128) {
        return value;
    }
    Nat const top = Nat{1} << (bits - 1);
    return top | (value & (top - 1));
}

} // namespace launchpad::harness
