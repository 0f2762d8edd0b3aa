"""Token sale launchpad model with exact integer arithmetic.

Integers are Python ints; configs, scenarios and reports are the same JSON
documents the ``launchpad`` CLI reads and writes (integers as decimal strings).
"""

from ._core import (
    MULTIPLIER,
    LaunchpadError,
    calculate_assets,
    calculate_assets_revert,
    calculate_original_amount,
    calculate_weighted_amount,
    deposit,
    div_rem,
    fuzz,
    mul_div_floor,
    replay,
    round_trip,
    validate_config,
)

__all__ = [
    "MULTIPLIER",
    "LaunchpadError",
    "calculate_assets",
    "calculate_assets_revert",
    "calculate_original_amount",
    "calculate_weighted_amount",
    "deposit",
    "div_rem",
    "fuzz",
    "mul_div_floor",
    "replay",
    "round_trip",
    "validate_config",
]
