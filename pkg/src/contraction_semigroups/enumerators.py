"""Exhaustive enumeration and exact counting of the map families.

Two independent routes exist for every order-restricted family:

* the *filtered* route walks all of I_n and keeps maps passing the pairwise
  definitions (no gap logic anywhere on this path);
* the *direct* route builds members from a domain subset and image steps
  bounded by the domain gaps.

Both yield maps ordered by height, then domain tuple, then image tuple.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from . import guards
from .kernels import DIRECT_FAMILIES, FAMILY_CODES, get_backend
from .pmap import (
    FamilyId,
    PartialInjection,
    in_family,
    stat_profile,
)
from .tables import CountTable

__all__ = [
    "enumerate_filtered",
    "enumerate_direct",
    "count_by_height",
    "count_by_height_fix",
    "count_with_image",
    "count_odci_profile",
    "count_odci_profile_fix",
    "odci_profile_table",
    "member_codes",
    "encode",
]


def _parse_family(family) -> FamilyId:
    return FamilyId.parse(family)


def enumerate_filtered(n: int, family, allow_large: bool = False) -> Iterator[PartialInjection]:
    family = _parse_family(family)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    guards.check_filtered(n, allow_large)
    points = range(1, n + 1)
    for p in range(n + 1):
        for dom in itertools.combinations(points, p):
            for img in itertools.permutations(points, p):
                alpha = PartialInjection._trusted(n, tuple(zip(dom, img)))
                if in_family(alpha, family):
                    yield alpha


def _image_tuples(n, dom, up, down, decreasing):
    """Image tuples in lex order whose steps satisfy ``1 <= |step| <= domain gap``."""
    p = len(dom)
    out = []
    img = [0] * p

    def extend(i):
        if i == p:
            out.append(tuple(img))
            return
        t = dom[i] - dom[i - 1]
        prev = img[i - 1]
        lo = max(1, prev - t) if down else prev + 1
        hi = min(n, prev + t) if up else prev - 1
        if decreasing:
            hi = min(hi, dom[i])
        for v in range(lo, hi + 1):
            if v != prev:
                img[i] = v
                extend(i + 1)

    first_hi = dom[0] if decreasing else n
    for v in range(1, first_hi + 1):
        img[0] = v
        extend(1)
    return out


def enumerate_direct(n: int, family, allow_large: bool = False) -> Iterator[PartialInjection]:
    family = _parse_family(family)
    if family.value not in DIRECT_FAMILIES:
        raise ValueError(f"direct enumeration does not support family {family.value}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    guards.check_direct(n, allow_large)
    yield PartialInjection._trusted(n, ())
    points = range(1, n + 1)
    for p in range(1, n + 1):
        for dom in itertools.combinations(points, p):
            if family is FamilyId.ORCI and p >= 2:
                images = sorted(
                    _image_tuples(n, dom, True, False, False)
                    + _image_tuples(n, dom, False, True, False)
                )
            elif family is FamilyId.OCIplus:
                images = _image_tuples(n, dom, False, True, False)
            else:
                images = _image_tuples(n, dom, True, False, family is FamilyId.ODCI)
            for img in images:
                yield PartialInjection._trusted(n, tuple(zip(dom, img)))


# kernel-backed counting -----------------------------------------------------


def _resolve_method(family: FamilyId, method: str) -> str:
    if method == "auto":
        return "direct" if family.value in DIRECT_FAMILIES else "filtered"
    if method == "direct" and family.value not in DIRECT_FAMILIES:
        raise ValueError(f"direct counting does not support family {family.value}")
    if method not in ("direct", "filtered"):
        raise ValueError(f"unknown method {method!r}")
    return method


def _partition_counts(n: int, family_value: str, method: str, lo: int, backend: Optional[str]):
    kern = get_backend(backend)
    code = FAMILY_CODES[family_value]
    if method == "filtered":
        return np.asarray(kern.filtered_counts(n, lo)[code])
    return np.asarray(kern.direct_counts(n, lo, code))


def _partitions(n):
    # lo = smallest domain point; 0 holds only the empty map
    return list(range(n + 1))


def count_by_height_fix(
    n: int,
    family,
    method: str = "auto",
    workers: int = 1,
    allow_large: bool = False,
    backend: Optional[str] = None,
) -> CountTable:
    """Exact ``(p, m)`` counts; partitions on the smallest domain point and sums them."""
    family = _parse_family(family)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    method = _resolve_method(family, method)
    if method == "filtered":
        guards.check_filtered(n, allow_large)
    else:
        guards.check_direct(n, allow_large)
    args = [(n, family.value, method, lo, backend) for lo in _partitions(n)]
    if workers == 1:
        parts = [_partition_counts(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_partition_counts, *zip(*args)))
    total = np.sum(parts, axis=0)
    cells = {(p, m): int(total[p, m]) for p in range(n + 1) for m in range(p + 1)}
    return CountTable(n, family, "by_height_fix", cells)


def count_by_height(n: int, family, **kwargs) -> CountTable:
    return count_by_height_fix(n, family, **kwargs).by_height()


def encode(alpha: PartialInjection) -> int:
    """Integer code shared with the kernels: ``sum(xa * (n+1)**(x-1))``."""
    base = alpha.n + 1
    return sum(y * base ** (x - 1) for x, y in alpha.pairs)


def member_codes(
    n: int,
    family,
    method: str = "auto",
    allow_large: bool = False,
    backend: Optional[str] = None,
) -> np.ndarray:
    """Sorted codes of every member, computed inside the kernels."""
    family = _parse_family(family)
    method = _resolve_method(family, method)
    if method == "filtered":
        guards.check_filtered(n, allow_large)
    else:
        guards.check_direct(n, allow_large)
    kern = get_backend(backend)
    code = FAMILY_CODES[family.value]
    parts = []
    for lo in _partitions(n):
        if method == "filtered":
            size = int(kern.filtered_counts(n, lo)[code].sum())
            parts.append(kern.filtered_codes(n, lo, code, size))
        else:
            size = int(kern.direct_counts(n, lo, code).sum())
            parts.append(kern.direct_codes(n, lo, code, size))
    return np.sort(np.concatenate(parts))


# image and profile counts ---------------------------------------------------


def count_with_image(n: int, image: Sequence[int]) -> int:
    """Number of OCI_n maps whose image set is exactly ``image``, by enumerating domains."""
    image = tuple(int(v) for v in image)
    if not image:
        raise ValueError("image tuple must be non-empty")
    if any(not 1 <= v <= n for v in image):
        raise ValueError(f"image points must lie in [1, {n}]")
    if any(b <= a for a, b in zip(image, image[1:])):
        raise ValueError("image tuple must be strictly increasing")
    d = [b - a for a, b in zip(image, image[1:])]
    count = 0
    for dom in itertools.combinations(range(1, n + 1), len(image)):
        if all(dom[i + 1] - dom[i] >= d[i] for i in range(len(d))):
            count += 1
    return count


@lru_cache(maxsize=32)
def _odci_profiles(n: int, with_fix: bool):
    cells = {}
    for alpha in enumerate_direct(n, FamilyId.ODCI):
        if not alpha.pairs:
            continue
        s = stat_profile(alpha)
        if with_fix:
            key = (s.waist_min, s.waist_max, s.shoulder_max, s.fix, s.height)
        else:
            key = (s.waist_min, s.waist_max, s.shoulder_max, s.height)
        cells[key] = cells.get(key, 0) + 1
    return cells


def odci_profile_table(n: int, with_fix: bool = False) -> CountTable:
    guards.check_direct(n)
    schema = "odci_profile_fix" if with_fix else "odci_profile"
    return CountTable(n, FamilyId.ODCI, schema, dict(_odci_profiles(n, with_fix)))


def _check_profile_args(n, k_minus, k_plus, l_plus, p):
    if not 1 <= k_minus <= k_plus <= l_plus <= n:
        raise ValueError(
            f"need 1 <= k- <= k+ <= l+ <= n, got {(k_minus, k_plus, l_plus)} with n={n}"
        )
    if p < 1:
        raise ValueError(f"height p={p} must be >= 1")
    guards.check_direct(n)


def count_odci_profile(n: int, k_minus: int, k_plus: int, l_plus: int, p: int) -> int:
    _check_profile_args(n, k_minus, k_plus, l_plus, p)
    return _odci_profiles(n, False).get((k_minus, k_plus, l_plus, p), 0)


def count_odci_profile_fix(
    n: int, k_minus: int, k_plus: int, l_plus: int, m: int, p: int
) -> int:
    _check_profile_args(n, k_minus, k_plus, l_plus, p)
    if not 0 <= m <= p:
        raise ValueError(f"fix m={m} outside [0, {p}]")
    return _odci_profiles(n, True).get((k_minus, k_plus, l_plus, m, p), 0)
