#pragma once

#include <launchpad/codec.hpp>
#include <launchpad/harness/properties.hpp>

#include <string>
#include <vector>

namespace launchpad::harness
{

/// Every named lemma and property the checks must cover.
std::vector<std::string> const &required_lemmas();

struct TraceRow
{
    std::string lemma;
    std::vector<std::string> checks; // checks that exercised it
    bool passed{false};              // mapped, and every mapped check passed
};

struct TraceMatrix
{
    std::vector<PropertyResult> results;
    std::vector<TraceRow> rows;

    bool ok() const noexcept;
};

/// Runs every property check at `budget` and maps lemmas to the checks
/// that exercised them.
TraceMatrix build_trace_matrix(PropertyBudget const &budget);

codec::Json encode(TraceMatrix const &matrix);

} // namespace launchpad::harness
