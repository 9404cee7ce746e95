"""Size guards for exhaustive enumeration.

``CONTRACTION_SEMIGROUPS_MAX_N`` can lower both caps but never raise them. The
``allow_large`` override lifts the built-in caps; the environment cap still holds.
"""

import os

FILTERED_MAX_N = 8  # |I_8| = 1,441,729
DIRECT_MAX_N = 14
ENV_MAX_N = "CONTRACTION_SEMIGROUPS_MAX_N"


class GuardError(RuntimeError):
    """Requested chain size exceeds an enumeration guard."""


def env_cap():
    raw = os.environ.get(ENV_MAX_N)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise GuardError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None


def effective_cap(default: int, allow_large: bool = False):
    cap = None if allow_large else default
    env = env_cap()
    if env is not None:
        cap = env if cap is None else min(cap, env)
    return cap


def check(n: int, default: int, allow_large: bool = False, what: str = "enumeration") -> None:
    cap = effective_cap(default, allow_large)
    if cap is not None and n > cap:
        hint = "" if allow_large else " (pass allow_large to override)"
        raise GuardError(f"{what} for n={n} exceeds guard n<={cap}{hint}")


def check_filtered(n: int, allow_large: bool = False) -> None:
    check(n, FILTERED_MAX_N, allow_large, "filtered enumeration over I_n")


def check_direct(n: int, allow_large: bool = False) -> None:
    check(n, DIRECT_MAX_N, allow_large, "direct enumeration")
