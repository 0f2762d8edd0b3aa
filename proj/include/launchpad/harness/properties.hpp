#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace launchpad::harness
{

/// How much work a property check does. Grids that the acceptance suite
/// runs exhaustively shrink to small ranges unless full_grids is set.
struct PropertyBudget
{
    std::uint64_t seed{0x5eed};
    std::uint64_t samples{2000};  // random samples per check
    std::uint64_t sequences{200}; // random schedules / states / scenarios
    bool full_grids{false};
};

/// Counts evaluated cases and keeps the first counterexample.
class Tally
{
public:
    template <typename Describe>
    void expect(bool holds, Describe &&describe)
    {
        ++cases_;
        if (!holds && violations_++ == 0) {
            counterexample_ = describe();
        }
    }

    std::uint64_t cases() const noexcept
    {
        return cases_;
    }

    std::uint64_t violations() const noexcept
    {
        return violations_;
    }

    std::string const &counterexample() const noexcept
    {
        return counterexample_;
    }

private:
    std::uint64_t cases_{0};
    std::uint64_t violations_{0};
    std::string counterexample_;
};

struct PropertyResult
{
    std::string name;
    std::vector<std::string> lemmas;
    std::uint64_t cases{0};
    std::uint64_t violations{0};
    std::string counterexample;
    double seconds{0};

    bool passed() const noexcept
    {
        return violations == 0 && cases > 0;
    }
};

struct PropertyCheck
{
    std::string name;
    /// Lemma and property names this check exercises.
    std::vector<std::string> lemmas;
    std::function<void(PropertyBudget const &, Tally &)> body;
};

std::vector<PropertyCheck> const &property_checks();

PropertyCheck const &find_check(std::string const &name);

PropertyResult run_check(PropertyCheck const &check, PropertyBudget const &budget);

} // namespace launchpad::harness
