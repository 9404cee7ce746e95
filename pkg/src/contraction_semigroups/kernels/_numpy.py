"""Vectorised numpy versions of the kernels in ``_numba``; same signatures and results."""

import numpy as np

I, CI, OCI, OCIPLUS, ORCI, ODCI = range(6)

_CHUNK = 1 << 15


def _powers(n):
    return (n + 1) ** np.arange(n, dtype=np.int64)


def _injections(n, lo):
    """All partial injections with min domain point ``lo`` as rows of images (0 = undefined)."""
    if lo == 0:
        return np.zeros((1, n), np.int16)
    rows = np.zeros((n, n), np.int16)
    rows[:, lo - 1] = np.arange(1, n + 1)
    used = np.zeros((n, n + 1), bool)
    used[np.arange(n), np.arange(1, n + 1)] = True
    for col in range(lo, n):
        allowed = ~used
        allowed[:, 0] = True
        r, v = np.nonzero(allowed)
        rows = rows[r]
        rows[:, col] = v
        used = used[r]
        used[np.arange(len(r)), v] = True
        used[:, 0] = False
    return rows


def _membership(rows, n):
    """Boolean masks, one per family, using the pairwise definitions."""
    defined = rows > 0
    contr = np.ones(len(rows), bool)
    pres = np.ones(len(rows), bool)
    rev = np.ones(len(rows), bool)
    for i in range(n):
        for j in range(i + 1, n):
            both = defined[:, i] & defined[:, j]
            d = rows[:, j] - rows[:, i]
            contr &= ~both | (np.abs(d) <= j - i)
            pres &= ~both | (d > 0)
            rev &= ~both | (d < 0)
    dec = np.all(rows <= np.arange(1, n + 1), axis=1)
    return [
        np.ones(len(rows), bool),
        contr,
        contr & pres,
        contr & rev,
        contr & (pres | rev),
        contr & pres & dec,
    ]


def _height_fix_key(rows, n):
    p = (rows > 0).sum(axis=1)
    m = (rows == np.arange(1, n + 1)).sum(axis=1)
    return p * (n + 1) + m


def filtered_counts(n, lo):
    counts = np.zeros((6, n + 1, n + 1), np.int64)
    if lo == 0:
        counts[:, 0, 0] = 1
        return counts
    rows = _injections(n, lo)
    key = _height_fix_key(rows, n)
    size = (n + 1) ** 2
    for fam, mask in enumerate(_membership(rows, n)):
        counts[fam] = np.bincount(key[mask], minlength=size).reshape(n + 1, n + 1)
    return counts


def filtered_codes(n, lo, family, size):
    if lo == 0:
        return np.zeros(size, np.int64)
    rows = _injections(n, lo)
    mask = _membership(rows, n)[family]
    codes = rows[mask].astype(np.int64) @ _powers(n)
    if len(codes) != size:
        raise ValueError(f"expected {size} codes, found {len(codes)}")
    return codes


def contraction_agreement(n, lo):
    if lo == 0:
        return 1, 1, 1
    rows = _injections(n, lo).astype(np.int64)
    defined = rows > 0
    cols = np.arange(n)

    pairwise = np.ones(len(rows), bool)
    for i in range(n):
        for j in range(i + 1, n):
            both = defined[:, i] & defined[:, j]
            pairwise &= ~both | (np.abs(rows[:, j] - rows[:, i]) <= j - i)

    # index of the nearest defined column strictly to the left, or -1
    marked = np.where(defined, cols, -1)
    running = np.maximum.accumulate(marked, axis=1)
    prev = np.full_like(running, -1)
    prev[:, 1:] = running[:, :-1]
    has_prev = defined & (prev >= 0)
    prev_val = np.take_along_axis(rows, np.maximum(prev, 0), axis=1)
    ok = ~has_prev | (np.abs(rows - prev_val) <= cols - prev)
    gapwise = ok.all(axis=1)

    total = len(rows)
    return total, int(np.sum(pairwise == gapwise)), int(pairwise.sum())


def _expand(n, family, k, a_last, b_last, sgn):
    """Child (row, a', b') triples of a frontier; ``k`` is the 0-based index being placed."""
    A = np.arange(1, n + 1)[None, :, None]
    B = np.arange(1, n + 1)[None, None, :]
    al = a_last[:, None, None]
    bl = b_last[:, None, None]
    mask = (A > al) & (np.abs(B - bl) <= A - al) & (B != bl)
    if family == ORCI:
        if k >= 2:
            s = sgn[:, None, None]
            mask &= ((s > 0) & (B > bl)) | ((s < 0) & (B < bl))
    elif family == OCIPLUS:
        mask &= B < bl
    else:
        mask &= B > bl
        if family == ODCI:
            mask &= B <= A
    r, ia, ib = np.nonzero(mask)
    return r, ia + 1, ib + 1


def _walk_direct(n, lo, family, want_codes):
    counts = np.zeros((n + 1, n + 1), np.int64)
    pw = _powers(n)
    b = np.arange(1, (lo if family == ODCI else n) + 1, dtype=np.int64)
    a = np.full_like(b, lo)
    first = b.copy()
    sgn = np.zeros_like(b)
    fx = (b == lo).astype(np.int64)
    code = b * pw[lo - 1]
    counts[1] += np.bincount(fx, minlength=n + 1)
    codes = [code] if want_codes else []
    for k in range(1, n):
        if len(a) == 0:
            break
        parts = []
        for s in range(0, len(a), _CHUNK):
            sl = slice(s, s + _CHUNK)
            r, na, nb = _expand(n, family, k, a[sl], b[sl], sgn[sl])
            r = r + s
            parts.append((r, na, nb))
        r = np.concatenate([p[0] for p in parts])
        na = np.concatenate([p[1] for p in parts]).astype(np.int64)
        nb = np.concatenate([p[2] for p in parts]).astype(np.int64)
        first = first[r]
        if k == 1:
            sgn = np.sign(nb - first)
        else:
            sgn = sgn[r]
        fx = fx[r] + (na == nb)
        code = code[r] + nb * pw[na - 1]
        a, b = na, nb
        counts[k + 1] += np.bincount(fx, minlength=n + 1)
        if want_codes:
            codes.append(code)
    return counts, codes


def direct_counts(n, lo, family):
    if lo == 0:
        counts = np.zeros((n + 1, n + 1), np.int64)
        counts[0, 0] = 1
        return counts
    return _walk_direct(n, lo, family, False)[0]


def direct_codes(n, lo, family, size):
    if lo == 0:
        return np.zeros(size, np.int64)
    codes = np.concatenate(_walk_direct(n, lo, family, True)[1])
    if len(codes) != size:
        raise ValueError(f"expected {size} codes, found {len(codes)}")
    return codes
