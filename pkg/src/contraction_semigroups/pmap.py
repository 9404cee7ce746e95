"""Partial injective maps on the chain {1..n}, their predicates and statistics.

Maps are written in postfix notation: ``(x)(ab) = ((x)a)b``, so ``compose(a, b)``
applies ``a`` first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

Pair = Tuple[int, int]
GapTuple = Tuple[int, ...]


class FamilyId(enum.Enum):
    I = "i"
    CI = "ci"
    OCI = "oci"
    OCIplus = "oci-plus"
    ORCI = "orci"
    ODCI = "odci"

    @classmethod
    def parse(cls, name: "str | FamilyId") -> "FamilyId":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        aliases = {"ociplus": "oci-plus", "oci+": "oci-plus"}
        key = aliases.get(key, key)
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown family {name!r}")


@dataclass(frozen=True, slots=True)
class PartialInjection:
    """A partial one-to-one map on {1..n} stored as domain-sorted pairs."""

    n: int
    pairs: Tuple[Pair, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"chain size must be a positive integer, got {self.n!r}")
        pairs = tuple((int(x), int(y)) for x, y in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        prev = 0
        images = set()
        for x, y in pairs:
            if not (1 <= x <= self.n and 1 <= y <= self.n):
                raise ValueError(f"point pair {(x, y)} outside [1, {self.n}]")
            if x == prev:
                raise ValueError(f"duplicate domain point {x}")
            if x < prev:
                raise ValueError("pairs must be sorted by domain point")
            if y in images:
                raise ValueError(f"duplicate image point {y}")
            images.add(y)
            prev = x

    @classmethod
    def _trusted(cls, n: int, pairs: Tuple[Pair, ...]) -> "PartialInjection":
        # bypasses validation; callers guarantee canonical form
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "pairs", pairs)
        return obj

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def image(self) -> Tuple[int, ...]:
        """Image points listed in domain order (not sorted)."""
        return tuple(y for _, y in self.pairs)

    @property
    def height(self) -> int:
        return len(self.pairs)

    def __call__(self, x: int) -> Optional[int]:
        for a, b in self.pairs:
            if a == x:
                return b
        return None

    def as_dict(self) -> dict:
        return dict(self.pairs)

    def notation(self) -> str:
        """Two-row notation, e.g. ``dom: 1 3 5 | im: 3 5 6``."""
        dom = "".join(f" {x}" for x in self.domain)
        im = "".join(f" {y}" for y in self.image)
        return f"dom:{dom} | im:{im}"

    def __str__(self) -> str:
        return self.notation()


def new_pmap(n: int, pairs: Iterable[Sequence[int]]) -> PartialInjection:
    """Build a map from unordered ``(x, xa)`` pairs, validating injectivity and range."""
    pairs = [tuple(p) for p in pairs]
    for p in pairs:
        if len(p) != 2:
            raise ValueError(f"malformed pair {p!r}")
    return PartialInjection(n, tuple(sorted(pairs)))


def parse_notation(n: int, text: str) -> PartialInjection:
    """Inverse of :meth:`PartialInjection.notation`."""
    try:
        left, right = text.split("|")
        dom = left.strip().removeprefix("dom:").split()
        im = right.strip().removeprefix("im:").split()
    except ValueError as exc:
        raise ValueError(f"cannot parse map {text!r}") from exc
    if len(dom) != len(im):
        raise ValueError(f"domain and image lengths differ in {text!r}")
    return new_pmap(n, zip(map(int, dom), map(int, im)))


def identity(n: int, points: Optional[Iterable[int]] = None) -> PartialInjection:
    pts = range(1, n + 1) if points is None else sorted(points)
    return PartialInjection(n, tuple((x, x) for x in pts))


def compose(alpha: PartialInjection, beta: PartialInjection) -> PartialInjection:
    if alpha.n != beta.n:
        raise ValueError(f"chain sizes differ: {alpha.n} != {beta.n}")
    table = dict(beta.pairs)
    out = tuple((x, table[y]) for x, y in alpha.pairs if y in table)
    return PartialInjection._trusted(alpha.n, out)


def inverse(alpha: PartialInjection) -> PartialInjection:
    return PartialInjection._trusted(alpha.n, tuple(sorted((y, x) for x, y in alpha.pairs)))


def gaps(points: Sequence[int]) -> GapTuple:
    return tuple(b - a for a, b in zip(points, points[1:]))


def gap_of_domain(alpha: PartialInjection) -> GapTuple:
    return gaps(alpha.domain)


def gap_of_image(alpha: PartialInjection) -> GapTuple:
    """Signed consecutive differences of the images, in domain order."""
    return gaps(alpha.image)


def _all_pairs(alpha: PartialInjection):
    ps = alpha.pairs
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            yield ps[i], ps[j]


def is_contraction(alpha: PartialInjection) -> bool:
    """Pairwise check of ``|xa - ya| <= |x - y|`` over the whole domain."""
    return all(abs(ya - yb) <= abs(xa - xb) for (xa, ya), (xb, yb) in _all_pairs(alpha))


def is_contraction_via_gaps(alpha: PartialInjection) -> bool:
    return all(abs(d) <= t for d, t in zip(gap_of_image(alpha), gap_of_domain(alpha)))


def is_order_preserving(alpha: PartialInjection) -> bool:
    # pairs are domain-sorted and injective, so x < y must give xa < ya
    return all(ya < yb for (_, ya), (_, yb) in _all_pairs(alpha))


def is_order_reversing(alpha: PartialInjection) -> bool:
    return all(ya > yb for (_, ya), (_, yb) in _all_pairs(alpha))


def is_order_decreasing(alpha: PartialInjection) -> bool:
    return all(y <= x for x, y in alpha.pairs)


def is_isometry(alpha: PartialInjection) -> bool:
    return all(abs(ya - yb) == abs(xa - xb) for (xa, ya), (xb, yb) in _all_pairs(alpha))


def in_family(alpha: PartialInjection, family: "FamilyId | str") -> bool:
    family = FamilyId.parse(family)
    if family is FamilyId.I:
        return True
    if not is_contraction(alpha):
        return False
    if family is FamilyId.CI:
        return True
    if family is FamilyId.OCI:
        return is_order_preserving(alpha)
    if family is FamilyId.OCIplus:
        return is_order_reversing(alpha)
    if family is FamilyId.ORCI:
        return is_order_preserving(alpha) or is_order_reversing(alpha)
    return is_order_preserving(alpha) and is_order_decreasing(alpha)


@dataclass(frozen=True, slots=True)
class StatProfile:
    """Statistics of a map.

    ``waist_*`` are min/max of the image, ``shoulder_*`` min/max of the domain,
    ``fix_min``/``fix_max`` the extreme fixed points, and ``below``/``above`` the
    number of domain points strictly left of ``fix_min`` / right of ``fix_max``.
    Fields that are undefined (empty map, or no fixed points) are ``None``.
    """

    height: int
    fix: int
    waist_min: Optional[int] = None
    waist_max: Optional[int] = None
    shoulder_min: Optional[int] = None
    shoulder_max: Optional[int] = None
    fix_min: Optional[int] = None
    fix_max: Optional[int] = None
    below: Optional[int] = None
    above: Optional[int] = None


def stat_profile(alpha: PartialInjection) -> StatProfile:
    if not alpha.pairs:
        return StatProfile(height=0, fix=0)
    dom = alpha.domain
    im = alpha.image
    fixed = [x for x, y in alpha.pairs if x == y]
    kw = dict(
        height=len(dom),
        fix=len(fixed),
        waist_min=min(im),
        waist_max=max(im),
        shoulder_min=dom[0],
        shoulder_max=dom[-1],
    )
    if fixed:
        lo, hi = fixed[0], fixed[-1]
        kw.update(
            fix_min=lo,
            fix_max=hi,
            below=sum(1 for x in dom if x < lo),
            above=sum(1 for x in dom if x > hi),
        )
    return StatProfile(**kw)
