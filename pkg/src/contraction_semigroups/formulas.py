"""Closed-form counts over exact integers.

Every binomial goes through :func:`binom`, which returns 0 whenever ``k > n``
or either argument is negative. Formulas lean on that convention at their
boundaries, so nothing here re-implements range checks on binomials.
"""

from __future__ import annotations

import math
import threading

__all__ = [
    "binom",
    "fibonacci",
    "compositions_positive",
    "compositions_nonneg",
    "oci_height_count",
    "oci_height_fix_count",
    "oci_image_class_count",
    "odci_height_count",
    "odci_height_fix_count",
    "odci_profile_count",
    "odci_profile_fix_count",
    "orci_height_count",
    "orci_height_fix_count",
    "orci_height_fix_count_printed",
    "ociplus_one_fix_count",
    "order_oci",
    "order_odci",
    "order_orci",
    "fib_identity_odd",
    "fib_identity_even",
    "ORDER_OCI_METHODS",
]


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


_fib = [0, 1]
_fib_lock = threading.Lock()


def fibonacci(k: int) -> int:
    """F_k with F_0 = 0, F_1 = 1, by iterative addition over a shared table."""
    if k < 0:
        raise ValueError(f"Fibonacci index must be non-negative, got {k}")
    if k < len(_fib):
        return _fib[k]
    with _fib_lock:
        while len(_fib) <= k:
            _fib.append(_fib[-1] + _fib[-2])
    return _fib[k]


def compositions_positive(n: int, p: int) -> int:
    return binom(n - 1, p - 1)


def compositions_nonneg(n: int, p: int) -> int:
    return binom(n + p - 1, p - 1)


def _check_height(n, p, lo=1):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not lo <= p <= n:
        raise ValueError(f"height p={p} outside [{lo}, {n}]")


def _check_fix(n, p, m):
    _check_height(n, p, lo=0)
    if not 0 <= m <= p:
        raise ValueError(f"fix m={m} outside [0, {p}]")


def _nonneg(value: int, what: str) -> int:
    if value < 0:
        raise ArithmeticError(f"{what} evaluated to {value} < 0; formula used out of range")
    return value


def oci_height_count(n: int, p: int) -> int:
    """Number of order-preserving contractions of height ``p``, ``1 <= p <= n``."""
    _check_height(n, p)
    return _nonneg(n * binom(n + p - 1, 2 * p - 1) + (1 - p) * binom(n + p, 2 * p), "F(n;p)")


def oci_height_fix_count(n: int, p: int, m: int) -> int:
    _check_fix(n, p, m)
    if m == p:
        return binom(n, m)
    return (p - m - 1) * binom(n + p - m - 2, 2 * p - m) + 2 * binom(n + p - m - 1, 2 * p - m)


def oci_image_class_count(n: int, p: int, q: int) -> int:
    """Maps in OCI_n whose image has ``p`` points spanning ``q = max - min``."""
    _check_height(n, p)
    if not p - 1 <= q <= n - 1:
        raise ValueError(f"gap sum q={q} outside [{p - 1}, {n - 1}]")
    return binom(n - q + p - 1, p)


def odci_height_count(n: int, p: int) -> int:
    _check_height(n, p, lo=0)
    return binom(n + p, 2 * p)


def odci_height_fix_count(n: int, p: int, m: int) -> int:
    _check_fix(n, p, m)
    if m == p:
        return binom(n, p)
    return binom(n + p - m - 1, 2 * p - m)


def _check_profile(n, k_minus, k_plus, l_plus, p):
    if not 1 <= k_minus <= k_plus <= l_plus <= n:
        raise ValueError(
            f"need 1 <= k- <= k+ <= l+ <= n, got {(k_minus, k_plus, l_plus)} with n={n}"
        )
    if p < 1:
        raise ValueError(f"height p={p} must be >= 1")


def odci_profile_count(n: int, k_minus: int, k_plus: int, l_plus: int, p: int) -> int:
    """ODCI maps with image min/max ``k_minus``/``k_plus``, domain max ``l_plus``, height ``p``.

    The product is evaluated as printed. At ``p == 1`` the second factor is
    ``binom(-1, -1) == 0`` while exactly one map exists, so the product is only
    a count for ``p >= 2``.
    """
    _check_profile(n, k_minus, k_plus, l_plus, p)
    return binom(l_plus - k_plus + p - 1, p - 1) * binom(k_plus - k_minus - 1, p - 2)


def odci_profile_fix_count(
    n: int, k_minus: int, k_plus: int, l_plus: int, m: int, p: int
) -> int:
    _check_profile(n, k_minus, k_plus, l_plus, p)
    if not 0 <= m < p:
        raise ValueError(f"fix m={m} must satisfy 0 <= m < p={p}")
    return binom(l_plus - k_plus + p - m - 2, p - m - 1) * binom(k_plus - k_minus - 1, p - 2)


def orci_height_count(n: int, p: int) -> int:
    _check_height(n, p)
    if p == 1:
        return n * n
    return _nonneg(
        2 * n * binom(n + p - 1, 2 * p - 1) + (2 - 2 * p) * binom(n + p, 2 * p), "F(n;p)"
    )


def _one_side(span_dom: int, span_im: int, steps: int) -> int:
    """Ways to place ``steps`` points on one side of a fixed point of a reversing contraction.

    Domain steps ``s_k >= 1`` sum to at most ``span_dom``, image steps
    ``1 <= e_k <= s_k`` sum to at most ``span_im``. Writing ``s_k = e_k + f_k``
    splits this into a positive composition of ``E`` and a non-negative
    composition of at most ``span_dom - E``.
    """
    if steps == 0:
        return 1
    total = 0
    for e in range(steps, min(span_dom, span_im) + 1):
        total += compositions_positive(e, steps) * binom(span_dom - e + steps, steps)
    return total


def ociplus_one_fix_count(n: int, p: int) -> int:
    """Order-reversing contractions of height ``p`` with a (necessarily unique) fixed point."""
    _check_height(n, p)
    total = 0
    for c in range(1, n + 1):
        for left in range(p):
            right = p - 1 - left
            total += _one_side(c - 1, n - c, left) * _one_side(n - c, c - 1, right)
    return total


def orci_height_fix_count(n: int, p: int, m: int) -> int:
    """Maps in ORCI_n with height ``p`` and ``m`` fixed points.

    Reversing maps of height >= 2 fix at most one point, so only the ``m == 1``
    and ``m == 0`` rows differ from the order-preserving counts. The reversing
    maps with one fixed point are counted by :func:`ociplus_one_fix_count`; they
    are not equinumerous with the preserving ones.
    """
    _check_fix(n, p, m)
    if m == p:
        return binom(n, m)
    if m == 1:
        return oci_height_fix_count(n, p, 1) + ociplus_one_fix_count(n, p)
    if m >= 2:
        return oci_height_fix_count(n, p, m)
    rest = sum(orci_height_fix_count(n, p, j) for j in range(1, p + 1))
    return _nonneg(orci_height_count(n, p) - rest, "F(n;p,0)")


def orci_height_fix_count_printed(n: int, p: int, m: int) -> int:
    """The published piecewise ORCI fixed-point formula, kept verbatim for comparison.

    Disagrees with enumeration in the ``m == 1 < p`` branch (it can even go
    negative, e.g. ``(3, 3, 1) -> -3``). No ``m == 0`` branch was published.
    """
    _check_fix(n, p, m)
    if m == p:
        return binom(n, m)
    if m == 1:
        return 2 * (p - 2) * binom(n + p - 3, 2 * p - 1) + 4 * binom(n + p - 2, 2 * p - 1) - n
    if m == 0:
        raise ValueError("no published formula for m = 0")
    return (p - m - 1) * binom(n + p - m - 2, 2 * p - m) + 2 * binom(n + p - m - 1, 2 * p - m)


def _order_oci_closed(n: int) -> int:
    num = (3 * n - 1) * fibonacci(2 * n) - (n - 5) * fibonacci(2 * n + 1)
    q, r = divmod(num, 5)
    assert r == 0, f"closed form for |OCI_{n}| not divisible by 5"
    return q


def _order_oci_recurrence(n: int) -> int:
    h = [1, 2, 6, 18]
    while len(h) <= n:
        h.append(6 * h[-1] - 11 * h[-2] + 6 * h[-3] - h[-4])
    return h[n]


def _order_oci_summation(n: int) -> int:
    return 1 + sum(oci_height_count(n, p) for p in range(1, n + 1))


ORDER_OCI_METHODS = {
    "closed": _order_oci_closed,
    "recurrence": _order_oci_recurrence,
    "summation": _order_oci_summation,
}


def order_oci(n: int, method: str = "closed") -> int:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    try:
        fn = ORDER_OCI_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(ORDER_OCI_METHODS)}")
    return fn(n)


def order_odci(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return fibonacci(2 * n + 1)


def order_orci(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    num = (6 * n - 2) * fibonacci(2 * n) - (2 * n - 10) * fibonacci(2 * n + 1)
    q, r = divmod(num, 5)
    assert r == 0, f"closed form for |ORCI_{n}| not divisible by 5"
    return q - 1 - n * n


def fib_identity_odd(n: int) -> int:
    return sum(binom(n + p, 2 * p) for p in range(n + 1))


def fib_identity_even(n: int) -> int:
    return sum(binom(n + p - 1, 2 * p - 1) for p in range(n + 1))
