"""numba kernels. Every kernel works on one partition: maps whose smallest domain
point is ``lo`` (``lo == 0`` is the partition holding only the empty map).

Maps are held as an image array ``cur[1..n]`` with 0 marking an undefined point.
Codes are ``sum(cur[x] * (n+1)**(x-1))``; they are unique per map.
"""

import numpy as np
from numba import njit

I, CI, OCI, OCIPLUS, ORCI, ODCI = range(6)


@njit(cache=True)
def _tally(n, lo, cur, counts):
    # pairwise definitions only; the filtered path must not use gap logic
    p = 0
    m = 0
    contr = True
    pres = True
    rev = True
    dec = True
    for x in range(lo, n + 1):
        y = cur[x]
        if y == 0:
            continue
        p += 1
        if y == x:
            m += 1
        if y > x:
            dec = False
        for x2 in range(lo, x):
            y2 = cur[x2]
            if y2 == 0:
                continue
            d = y - y2
            if abs(d) > x - x2:
                contr = False
            if d < 0:
                pres = False
            if d > 0:
                rev = False
    counts[I, p, m] += 1
    if contr:
        counts[CI, p, m] += 1
        if pres:
            counts[OCI, p, m] += 1
        if rev:
            counts[OCIPLUS, p, m] += 1
        if pres or rev:
            counts[ORCI, p, m] += 1
        if pres and dec:
            counts[ODCI, p, m] += 1


@njit(cache=True)
def _member(n, lo, cur, family):
    contr = True
    pres = True
    rev = True
    dec = True
    for x in range(lo, n + 1):
        y = cur[x]
        if y == 0:
            continue
        if y > x:
            dec = False
        for x2 in range(lo, x):
            y2 = cur[x2]
            if y2 == 0:
                continue
            d = y - y2
            if abs(d) > x - x2:
                contr = False
            if d < 0:
                pres = False
            if d > 0:
                rev = False
    if family == I:
        return True
    if not contr:
        return False
    if family == CI:
        return True
    if family == OCI:
        return pres
    if family == OCIPLUS:
        return rev
    if family == ORCI:
        return pres or rev
    return pres and dec


@njit(cache=True)
def _walk_injections(n, lo, mode, family, counts, codes):
    """Visit every partial injection with min domain point ``lo``.

    mode 0 tallies all families into ``counts``; mode 1 writes member codes of
    ``family`` into ``codes`` and returns how many were written.
    """
    cur = np.zeros(n + 2, np.int64)
    used = np.zeros(n + 2, np.bool_)
    pw = np.ones(n + 1, np.int64)
    for i in range(1, n + 1):
        pw[i] = pw[i - 1] * (n + 1)
    written = 0
    x = lo
    cur[lo] = 0
    while x >= lo:
        v = cur[x]
        if v > 0:
            used[v] = False
        v += 1
        while v >= 1 and v <= n and used[v]:
            v += 1
        if v > n:
            x -= 1
            continue
        cur[x] = v
        if v > 0:
            used[v] = True
        if x == n:
            if mode == 0:
                _tally(n, lo, cur, counts)
            elif _member(n, lo, cur, family):
                c = 0
                for z in range(lo, n + 1):
                    c += cur[z] * pw[z - 1]
                codes[written] = c
                written += 1
        else:
            x += 1
            cur[x] = -1
    return written


@njit(cache=True)
def filtered_counts(n, lo):
    """Counts indexed ``[family, height, fix]`` over the partition ``lo`` of I_n."""
    counts = np.zeros((6, n + 1, n + 1), np.int64)
    if lo == 0:
        counts[:, 0, 0] = 1
        return counts
    _walk_injections(n, lo, 0, 0, counts, np.zeros(0, np.int64))
    return counts


@njit(cache=True)
def filtered_codes(n, lo, family, size):
    """Codes of the family members in partition ``lo``; ``size`` must be the member count."""
    codes = np.zeros(size, np.int64)
    if lo == 0:
        if size:
            codes[0] = 0
        return codes
    counts = np.zeros((6, n + 1, n + 1), np.int64)
    _walk_injections(n, lo, 1, family, counts, codes)
    return codes


@njit(cache=True)
def contraction_agreement(n, lo):
    """Compare the pairwise and adjacent-gap contraction tests on partition ``lo``.

    Returns ``(maps visited, maps where both tests agree, contractions)``.
    """
    if lo == 0:
        return 1, 1, 1
    cur = np.zeros(n + 2, np.int64)
    used = np.zeros(n + 2, np.bool_)
    total = 0
    agree = 0
    contractions = 0
    x = lo
    cur[lo] = 0
    while x >= lo:
        v = cur[x]
        if v > 0:
            used[v] = False
        v += 1
        while v >= 1 and v <= n and used[v]:
            v += 1
        if v > n:
            x -= 1
            continue
        cur[x] = v
        if v > 0:
            used[v] = True
        if x == n:
            pairwise = True
            for z in range(lo, n + 1):
                if cur[z] == 0:
                    continue
                for z2 in range(lo, z):
                    if cur[z2] != 0 and abs(cur[z] - cur[z2]) > z - z2:
                        pairwise = False
            gapwise = True
            prev = 0
            for z in range(lo, n + 1):
                if cur[z] == 0:
                    continue
                if prev > 0 and abs(cur[z] - cur[prev]) > z - prev:
                    gapwise = False
                prev = z
            total += 1
            if pairwise == gapwise:
                agree += 1
            if pairwise:
                contractions += 1
        else:
            x += 1
            cur[x] = -1
    return total, agree, contractions


@njit(cache=True)
def _image_bounds(n, family, k, a_new, a_prev, b_prev, sgn):
    t = a_new - a_prev
    lo_b = max(1, b_prev - t)
    hi_b = min(n, b_prev + t)
    up = family == OCI or family == ODCI or (family == ORCI and (k == 1 or sgn > 0))
    down = family == OCIPLUS or (family == ORCI and (k == 1 or sgn < 0))
    if not up:
        hi_b = min(hi_b, b_prev - 1)
    if not down:
        lo_b = max(lo_b, b_prev + 1)
    if family == ODCI and hi_b > a_new:
        hi_b = a_new
    return lo_b, hi_b


@njit(cache=True)
def _walk_direct(n, lo, family, counts, codes):
    """Depth-first construction of monotone contractions with min domain point ``lo``.

    Each node of the search tree (a prefix of domain/image pairs) is itself a
    member map; every member is reached by exactly one path.
    """
    a = np.zeros(n, np.int64)
    b = np.zeros(n, np.int64)
    fx = np.zeros(n, np.int64)
    code = np.zeros(n, np.int64)
    ca = np.zeros(n, np.int64)
    cb = np.zeros(n, np.int64)
    pw = np.ones(n + 1, np.int64)
    for i in range(1, n + 1):
        pw[i] = pw[i - 1] * (n + 1)
    want_codes = codes.shape[0] > 0
    written = 0
    b1_hi = lo if family == ODCI else n
    for b1 in range(1, b1_hi + 1):
        a[0] = lo
        b[0] = b1
        fx[0] = 1 if b1 == lo else 0
        code[0] = b1 * pw[lo - 1]
        counts[1, fx[0]] += 1
        if want_codes:
            codes[written] = code[0]
            written += 1
        if n == 1:
            continue
        k = 1
        ca[1] = lo + 1
        cb[1] = -1
        while k >= 1:
            sgn = 0
            if k >= 2:
                sgn = 1 if b[1] > b[0] else -1
            found = False
            while ca[k] <= n:
                lb, hb = _image_bounds(n, family, k, ca[k], a[k - 1], b[k - 1], sgn)
                if cb[k] < lb:
                    cb[k] = lb
                if cb[k] == b[k - 1]:
                    cb[k] += 1
                if cb[k] <= hb:
                    found = True
                    break
                ca[k] += 1
                cb[k] = -1
            if not found:
                k -= 1
                continue
            a[k] = ca[k]
            b[k] = cb[k]
            fx[k] = fx[k - 1] + (1 if a[k] == b[k] else 0)
            code[k] = code[k - 1] + b[k] * pw[a[k] - 1]
            counts[k + 1, fx[k]] += 1
            if want_codes:
                codes[written] = code[k]
                written += 1
            cb[k] += 1
            if k + 1 < n:
                k += 1
                ca[k] = a[k - 1] + 1
                cb[k] = -1
    return written


@njit(cache=True)
def direct_counts(n, lo, family):
    """Counts indexed ``[height, fix]`` for an order-restricted family on partition ``lo``."""
    counts = np.zeros((n + 1, n + 1), np.int64)
    if lo == 0:
        counts[0, 0] = 1
        return counts
    _walk_direct(n, lo, family, counts, np.zeros(0, np.int64))
    return counts


@njit(cache=True)
def direct_codes(n, lo, family, size):
    codes = np.zeros(size, np.int64)
    if lo == 0:
        return codes
    counts = np.zeros((n + 1, n + 1), np.int64)
    _walk_direct(n, lo, family, counts, codes)
    return codes
