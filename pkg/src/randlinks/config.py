"""Resource caps and statistical tolerances.

Every cap can be overridden with an environment variable named
``RANDLINKS_<NAME>`` (for instance ``RANDLINKS_MAX_EXACT_N=5000``). Values are
read at call time so tests and the CLI can adjust them without reimporting.
"""

from __future__ import annotations

import os

from randlinks.errors import ResourceLimitError

ENV_PREFIX = "RANDLINKS_"

DEFAULT_CAPS = {
    "MAX_EXACT_N": 2000,  # Stirling rows
    "MAX_PARTITION_N": 120,  # partition enumeration / class scan
    "MAX_BRUTE_N": 8,  # exhaustive passes over S_n
    "MAX_WALKS": 10_000_000,
    "MAX_STEPS": 1_000_000,
    "MAX_STRANDS": 1000,
}

# Statistical tolerances used by the test-suite and the acceptance gate.
# Each is a ~4 standard-error band at the stated sample size, or the value
# fixed by the acceptance criteria.
TOLERANCES = {
    "mean_components_w1e5": 0.02,
    "mean_components_w1e6": 0.01,
    "mean_components_n5_w1e5": 0.03,
    "tv_components_w1e5": 0.02,
    "tv_components_w1e6": 0.01,
    "tv_uniform_w1e6": 0.02,
    "class_frequency": 0.01,
    "uniform_oracle_prob_w1e5": 0.01,
    "chi2_alpha": 1e-3,
}


def cap(name: str) -> int:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return DEFAULT_CAPS[name]
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


def check_cap(name: str, value: int, what: str) -> None:
    limit = cap(name)
    if value > limit:
        raise ResourceLimitError(
            f"{what}={value} exceeds cap {limit} (override with {ENV_PREFIX}{name})"
        )
