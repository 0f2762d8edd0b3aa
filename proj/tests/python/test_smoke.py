import json
import os
import pathlib
import subprocess

import pytest

import launchpad

SCENARIOS = pathlib.Path(
    os.environ.get("LAUNCHPAD_SCENARIOS", pathlib.Path(__file__).parents[2] / "scenarios")
)

MAX = 2**128 - 1


def config(**overrides):
    base = {
        "start_date": "100",
        "end_date": "200",
        "mechanic": {"type": "fixed_price", "deposit_token_amount": "1", "sale_token_amount": "1"},
        "sale_amount": "100",
        "total_sale_amount": "100",
        "soft_cap": "1",
        "discounts": [],
        "vesting": None,
        "distribution_proportions": {"solver_account": "solver", "stakeholder_proportions": []},
    }
    base.update(overrides)
    return base


def test_mul_div_full_width():
    assert launchpad.mul_div_floor(5, 3, 2) == 7
    assert launchpad.mul_div_floor(MAX, MAX, MAX) == MAX
    assert launchpad.mul_div_floor(MAX, 3, 4) == MAX * 3 // 4


def test_errors_are_python_exceptions():
    with pytest.raises(launchpad.LaunchpadError, match="128-bit"):
        launchpad.mul_div_floor(MAX, 2, 1)
    with pytest.raises(launchpad.LaunchpadError):
        launchpad.div_rem(1, 0)
    with pytest.raises(TypeError):
        launchpad.mul_div_floor(-1, 1, 1)
    with pytest.raises(TypeError):
        launchpad.mul_div_floor(MAX + 1, 1, 1)


def test_assets_and_discounts():
    assert launchpad.calculate_assets(10, 3, 7) == 23
    assert launchpad.calculate_assets_revert(23, 3, 7) == 9
    assert launchpad.round_trip(10, 3, 7) == (23, 9, 1, 6)
    assert launchpad.calculate_weighted_amount(100, 500) == 105
    assert launchpad.calculate_original_amount(105, 500) == 100
    assert launchpad.MULTIPLIER == 10000


def test_validate_config_names_clauses():
    assert launchpad.validate_config(config()) == []
    assert launchpad.validate_config(config(end_date="100")) == ["dates"]


def test_deposit_refund():
    out = launchpad.deposit(config(), 25, 0, 90, 150)
    assert out["refund"] == "15"
    assert out["new_amount"] == "10"


def test_replay_matches_golden_report():
    for path in sorted(SCENARIOS.glob("*.json")):
        report = launchpad.replay(json.loads(path.read_text()))
        expected = json.loads((SCENARIOS / "expected" / path.name).read_text())
        assert report == expected, path.name


def test_fuzz_passes():
    summary = launchpad.fuzz(3, 100)
    assert summary["passed"] is True
    assert summary["cases"] == "100"


@pytest.mark.skipif("LAUNCHPAD_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["LAUNCHPAD_CLI"]
    assert subprocess.run([cli, "fuzz", "--seed", "1", "--cases", "0"]).returncode == 2
    out = tmp_path / "r.json"
    scenario = SCENARIOS / "over_cap_refund.json"
    done = subprocess.run([cli, "replay", "--scenario", str(scenario), "--out", str(out)])
    assert done.returncode == 0
    assert json.loads(out.read_text()) == json.loads(
        (SCENARIOS / "expected" / "over_cap_refund.json").read_text()
    )
