"""Enumeration bounds and shared input-error types.

Full enumeration of standard fillings grows as n!, and the permutation
graphs grow the same way, so every entry point that walks one of those
spaces refuses degrees above a cap unless explicitly forced.  The caps can
be raised globally through the ``YAMHALL_MAX_N`` environment variable.
"""

import os

DEFAULT_ENUM_BOUND = 10
DEFAULT_GRAPH_BOUND = 8


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2, HTTP 400)."""


class BoundExceeded(InputError):
    """Requested degree is above the configured enumeration cap."""


def _env_bound() -> int | None:
    raw = os.environ.get("YAMHALL_MAX_N")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"YAMHALL_MAX_N must be an integer, got {raw!r}") from exc


def enum_bound() -> int:
    """Largest degree enumerated by filling sums without ``force``."""
    return _env_bound() or DEFAULT_ENUM_BOUND


def graph_bound() -> int:
    """Largest degree for permutation-graph construction without ``force``."""
    env = _env_bound()
    return env if env is not None else DEFAULT_GRAPH_BOUND


def check_enum_bound(n: int, force: bool = False) -> None:
    if not force and n > enum_bound():
        raise BoundExceeded(
            f"degree {n} exceeds enumeration bound {enum_bound()}; "
            "pass force=True (CLI: --force) or raise YAMHALL_MAX_N"
        )


def check_graph_bound(n: int, force: bool = False) -> None:
    if not force and n > graph_bound():
        raise BoundExceeded(
            f"degree {n} exceeds graph bound {graph_bound()}; "
            "pass force=True (CLI: --force) or raise YAMHALL_MAX_N"
        )
