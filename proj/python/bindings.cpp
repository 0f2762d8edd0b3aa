#include <launchpad/arith.hpp>
#include <launchpad/assets.hpp>
#include <launchpad/claim.hpp>
#include <launchpad/codec.hpp>
#include <launchpad/deposit.hpp>
#include <launchpad/discounts.hpp>
#include <launchpad/harness/fuzz.hpp>
#include <launchpad/harness/replay.hpp>
#include <launchpad/harness/scenario.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// Nat crosses the boundary as a Python int, via its decimal form.
namespace pybind11::detail
{
template <>
struct type_caster<launchpad::Nat>
{
    PYBIND11_TYPE_CASTER(launchpad::Nat, const_name("int"));

    bool load(handle src, bool)
    {
        if (!src || !PyLong_Check(src.ptr())) {
            return false;
        }
        std::string const text = py::str(src);
        try {
            value = launchpad::parse_nat(text);
        }
        catch (launchpad::Error const &) {
            return false;
        }
        return true;
    }

    static handle cast(launchpad::Nat v, return_value_policy, handle)
    {
        return PyLong_FromString(launchpad::to_string(v).c_str(), nullptr, 10);
    }
};
} // namespace pybind11::detail

namespace
{
using namespace launchpad;

py::object to_python(codec::Json const &json)
{
    return py::module_::import("json").attr("loads")(json.dump());
}

codec::Json from_python(py::object const &obj)
{
    std::string const text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return codec::Json::parse(text);
}

PriceFraction price(Nat deposit_token_amount, Nat sale_token_amount)
{
    return {deposit_token_amount, sale_token_amount};
}
} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Token sale launchpad model: exact arithmetic, transitions, replay and fuzzing";

    py::register_exception<Error>(m, "LaunchpadError", PyExc_ValueError);

    m.def("mul_div_floor", &mul_div_floor, py::arg("x"), py::arg("y"), py::arg("k"));
    m.def(
        "div_rem",
        [](Nat x, Nat y) {
            auto const r = div_rem(x, y);
            return py::make_tuple(r.quotient, r.remainder);
        },
        py::arg("x"), py::arg("y"));

    m.def(
        "calculate_assets",
        [](Nat w, Nat d, Nat s) { return calculate_assets(w, price(d, s)); },
        py::arg("weight"), py::arg("deposit_token_amount"), py::arg("sale_token_amount"));
    m.def(
        "calculate_assets_revert",
        [](Nat a, Nat d, Nat s) { return calculate_assets_revert(a, price(d, s)); },
        py::arg("assets"), py::arg("deposit_token_amount"), py::arg("sale_token_amount"));
    m.def(
        "round_trip",
        [](Nat w, Nat d, Nat s) {
            auto const r = round_trip_remainders(w, price(d, s));
            return py::make_tuple(r.assets, r.reverted, r.rem1, r.rem2);
        },
        py::arg("weight"), py::arg("deposit_token_amount"), py::arg("sale_token_amount"));

    m.attr("MULTIPLIER") = kMultiplier;
    m.def("calculate_weighted_amount", &calculate_weighted_amount, py::arg("amount"), py::arg("percentage"));
    m.def("calculate_original_amount", &calculate_original_amount, py::arg("weighted_amount"), py::arg("percentage"));

    m.def(
        "validate_config",
        [](py::object const &config) {
            auto const v = validate_config(codec::decode_config(from_python(config)));
            std::vector<std::string> clauses;
            for (auto c : v.violated) {
                clauses.emplace_back(to_string(c));
            }
            return clauses;
        },
        py::arg("config"), "Violated clause names; empty when the config is valid.");

    m.def(
        "deposit",
        [](py::object const &config, Nat amount, Nat deposited, Nat sold, Nat time) {
            auto const c = codec::decode_config(from_python(config));
            return to_python(codec::encode(deposit_spec(c, amount, deposited, sold, time)));
        },
        py::arg("config"), py::arg("amount"), py::arg("deposited"), py::arg("sold"), py::arg("time"));

    m.def(
        "replay",
        [](py::object const &scenario, bool check_invariants) {
            auto const s = harness::decode_scenario(from_python(scenario));
            return to_python(harness::encode(harness::replay(s, {.check_invariants = check_invariants})));
        },
        py::arg("scenario"), py::arg("check_invariants") = true);

    m.def(
        "fuzz",
        [](std::uint64_t seed, std::uint64_t cases, unsigned jobs) {
            harness::FuzzOptions o{.seed = seed, .cases = cases, .jobs = jobs};
            harness::FuzzSummary summary;
            {
                py::gil_scoped_release release;
                summary = harness::fuzz(o);
            }
            return to_python(harness::encode(summary));
        },
        py::arg("seed"), py::arg("cases"), py::arg("jobs") = 1);
}
