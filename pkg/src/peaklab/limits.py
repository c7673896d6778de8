"""Size guards for group sweeps and enumeration oracles.

Everything in this package is exact, so the only thing standing between a
user and a week-long computation is the size of the group being swept.
Guards are soft: the PEAKLAB_MAX_N environment variable raises (or lowers)
every cap at once, and most entry points take ``force=True`` to bypass the
check entirely.
"""

from __future__ import annotations

import os


class ResourceLimitError(RuntimeError):
    """A requested computation exceeds its size guard."""


# Default caps.  Iteration alone is cheap, so the group iterators allow a
# little more than the quadratic sweeps used by identity verification.
SYMMETRIC_ITER_MAX = 8
HYPEROCT_ITER_MAX = 6
VERIFY_MAX = {"S": 6, "B": 4}
POSET_ORACLE_MAX_N = 6
IMAGE_SET_MAX_K = 5
LINEXT_MAX = {"A": 8, "B": 5}
BIPARTITE_MAX_N = 4
BIPARTITE_MAX_VARS = 3
PEAK_RANK_MAX_N = 7


def env_override() -> int | None:
    raw = os.environ.get("PEAKLAB_MAX_N")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def check_limit(what: str, n: int, default_max: int, force: bool = False) -> None:
    """Raise ResourceLimitError if n exceeds the effective cap for `what`."""
    if force:
        return
    cap = env_override()
    if cap is None:
        cap = default_max
    if n > cap:
        raise ResourceLimitError(
            f"{what}: n={n} exceeds the size guard {cap} "
            f"(set PEAKLAB_MAX_N or pass force=True to override)"
        )
