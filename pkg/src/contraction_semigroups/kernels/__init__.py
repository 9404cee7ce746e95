"""Counting kernels with a numba backend and a pure-numpy fallback.

Set ``CONTRACTION_SEMIGROUPS_NO_NUMBA=1`` to force the numpy backend; it is also
used automatically when numba cannot be imported.
"""

import os

ENV_NO_NUMBA = "CONTRACTION_SEMIGROUPS_NO_NUMBA"

FAMILY_CODES = {"i": 0, "ci": 1, "oci": 2, "oci-plus": 3, "orci": 4, "odci": 5}
DIRECT_FAMILIES = ("oci", "oci-plus", "orci", "odci")


def _want_numba():
    return os.environ.get(ENV_NO_NUMBA, "").strip().lower() not in ("1", "true", "yes", "on")


if _want_numba():
    try:
        from . import _numba as backend
    except ImportError:  # pragma: no cover - numba missing
        from . import _numpy as backend
else:
    from . import _numpy as backend

BACKEND = backend.__name__.rsplit("_", 1)[-1]


def get_backend(name=None):
    """Return a kernel module by name (``"numba"`` or ``"numpy"``); default is the active one."""
    if name is None:
        return backend
    if name == "numba":
        from . import _numba

        return _numba
    if name == "numpy":
        from . import _numpy

        return _numpy
    raise ValueError(f"unknown backend {name!r}")
