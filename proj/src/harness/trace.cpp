#include <launchpad/harness/trace.hpp>

#include <algorithm>

namespace launchpad::harness
{

std::vector<std::string> const &required_lemmas()
{
    static std::vector<std::string> const names{
        // arithmetic
        "Lemma_Div_Maintains_GTE",
        "Lemma_Div_Maintains_GT",
        "Lemma_MulDivGreater_From_Scratch",
        "Lemma_MulDivStrictlyGreater_From_Scratch",
        "Lemma_MulDivLess_From_Scratch",
        "Lemma_MulDivStrictlyLess_From_Scratch",
        "Lemma_DivMul_Bounds",
        "Lemma_DivLowerBound_from_StrictMul",
        // assets
        "Lemma_CalculateAssets_IsGreaterOrEqual",
        "Lemma_CalculateAssets_IsGreater",
        "Lemma_CalculateAssets_IsLess",
        "Lemma_CalculateAssetsRevert_IsGreaterOrEqual",
        "Lemma_CalculateAssetsRevertSpec_Monotonic",
        "Lemma_RoundTripLossEquation",
        "Lemma_AssetsRevert_RoundTrip_bounds",
        // discounts and config
        "Lemma_CalculateWeightedAmount_IsGreaterOrEqual",
        "Lemma_CalculateOriginalAmount_IsLessOrEqual",
        "Lemma_WeightOriginal_RoundTrip_lte",
        "Lemma_UniqueActiveDiscount",
        "Lemma_CalculateWeightedAmountSpec_Monotonic",
        "Lemma_CalculateOriginalAmountSpec_Monotonic",
        "Lemma_WeightOriginal_RoundTrip_bounds",
        // deposit
        "Lemma_RefundIsSafe",
        "Lemma_DepositFixedPrice_AmountConservation",
        // claim
        "Lemma_UserAllocationSpec",
        "Lemma_CalculateVestingSpec_Properties",
        "Lemma_CalculateVestingSpec_Monotonic",
        // state machine
        "Lemma_StatusIsMutuallyExclusive",
        "Lemma_StatusTimeMovesForward",
        "Lemma_StatusFinalStatesAreTerminal",
        // named properties
        "Property 1",
        "Property 2",
        "Property 3",
        "Property 4",
        "Property 5",
        "Property 6",
        "FilterDistributedStakeholders correctness",
        "FilterDistributedStakeholders soundness",
        "FilterDistributedStakeholders completeness",
        "FilterDistributedStakeholders uniqueness preservation",
        "GetFilteredDistributionsSpec",
        "ValidConfig",
        "Ledger coherence",
        "DepositSpec transition",
        "WithdrawSpec transition",
        "ClaimSpec transition",
        "ClaimIndividualVestingSpec transition",
        "DistributeTokensSpec transition",
    };
    return names;
}

bool TraceMatrix::ok() const noexcept
{
    return std::all_of(results.begin(), results.end(), [](auto const &r) { return r.passed(); }) &&
           std::all_of(rows.begin(), rows.end(), [](auto const &r) { return r.passed; });
}

TraceMatrix build_trace_matrix(PropertyBudget const &budget)
{
    TraceMatrix matrix;
    for (auto const &check : property_checks()) {
        matrix.results.push_back(run_check(check, budget));
    }

    std::vector<std::string> names = required_lemmas();
    for (auto const &r : matrix.results) {
        for (auto const &lemma : r.lemmas) {
            if (std::find(names.begin(), names.end(), lemma) == names.end()) {
                names.push_back(lemma);
            }
        }
    }

    for (auto const &name : names) {
        TraceRow row{.lemma = name};
        bool all_passed = true;
        for (auto const &r : matrix.results) {
            if (std::find(r.lemmas.begin(), r.lemmas.end(), name) != r.lemmas.end()) {
                row.checks.push_back(r.name);
                all_passed = all_passed && r.passed();
            }
        }
        row.passed = !row.checks.empty() && all_passed;
        matrix.rows.push_back(std::move(row));
    }
    return matrix;
}

codec::Json encode(TraceMatrix const &matrix)
{
    codec::Json checks = codec::Json::array();
    for (auto const &r : matrix.results) {
        checks.push_back({
            {"name", r.name},
            {"lemmas", r.lemmas},
            {"cases", std::to_string(r.cases)},
            {"violations", std::to_string(r.violations)},
            {"counterexample", r.counterexample},
            {"passed", r.passed()},
        });
    }
    codec::Json rows = codec::Json::array();
    for (auto const &row : matrix.rows) {
        rows.push_back({{"lemma", row.lemma}, {"checks", row.checks}, {"passed", row.passed}});
    }
    return {{"checks", checks}, {"lemmas", rows}, {"passed", matrix.ok()}};
}

} // namespace launchpad::harness
