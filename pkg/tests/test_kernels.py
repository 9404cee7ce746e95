import os
import subprocess
import sys

import numpy as np
import pytest

from contraction_semigroups.enumerators import encode, enumerate_filtered, member_codes
from contraction_semigroups.kernels import FAMILY_CODES, get_backend

NUMBA = get_backend("numba")
NUMPY = get_backend("numpy")


@pytest.mark.parametrize("n", range(1, 8))
def test_filtered_counts_backends_agree(n):
    for lo in range(n + 1):
        assert np.array_equal(NUMBA.filtered_counts(n, lo), NUMPY.filtered_counts(n, lo))


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("family", ["oci", "oci-plus", "orci", "odci"])
def test_direct_counts_backends_agree(n, family):
    code = FAMILY_CODES[family]
    for lo in range(n + 1):
        assert np.array_equal(NUMBA.direct_counts(n, lo, code), NUMPY.direct_counts(n, lo, code))


@pytest.mark.parametrize("n", range(1, 7))
def test_codes_backends_agree(n):
    for family, code in FAMILY_CODES.items():
        a = member_codes(n, family, method="filtered", backend="numba")
        b = member_codes(n, family, method="filtered", backend="numpy")
        assert np.array_equal(a, b)
        if family != "i" and family != "ci":
            c = member_codes(n, family, method="direct", backend="numpy")
            assert np.array_equal(a, c)


@pytest.mark.parametrize("n", range(1, 7))
def test_codes_match_python_objects(n):
    for family in FAMILY_CODES:
        want = sorted(encode(a) for a in enumerate_filtered(n, family))
        got = member_codes(n, family, method="filtered")
        assert got.tolist() == want
        assert len(set(want)) == len(want)


@pytest.mark.parametrize("n", range(1, 8))
def test_contraction_agreement_backends(n):
    for lo in range(n + 1):
        a = tuple(int(x) for x in NUMBA.contraction_agreement(n, lo))
        b = tuple(int(x) for x in NUMPY.contraction_agreement(n, lo))
        assert a == b
        assert a[0] == a[1]


def test_partition_zero_is_empty_map():
    assert int(NUMBA.filtered_counts(4, 0)[0].sum()) == 1
    assert int(NUMBA.direct_counts(4, 0, FAMILY_CODES["oci"]).sum()) == 1


def test_unknown_backend():
    with pytest.raises(ValueError):
        get_backend("cython")


def test_env_flag_selects_numpy():
    env = dict(os.environ, CONTRACTION_SEMIGROUPS_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from contraction_semigroups.kernels import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
