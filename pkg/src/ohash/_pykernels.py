"""Pure-Python search kernels.

The compiled twin in ``_ckernels.pyx`` mirrors these argument for argument;
``backend`` picks one set at import time. Verification slices lean on bytes
equality (a memcmp) for speed; the ``*_counted`` variants compare symbol by
symbol so tests can count exactly how much work each verification does.
"""

from __future__ import annotations

PERFECT1 = 1
PERFECT2 = 2
FOLD_MOD = 3


def naive_positions(x, y):
    """All start positions of x in y by direct comparison at every alignment."""
    m = len(x)
    out = []
    for j in range(len(y) - m + 1):
        if y[j : j + m] == x:
            out.append(j)
    return out


def qgram_positions(x, y, q, shifts, sh, kind):
    """Generic engine: hash the window's final q-gram, shift or fully verify."""
    m = len(x)
    n = len(y)
    out = []
    t = m - 1
    while t < n:
        if kind == PERFECT1:
            h = y[t]
        elif kind == PERFECT2:
            h = (y[t - 1] << 8) | y[t]
        else:
            h = 0
            for k in range(t - q + 1, t + 1):
                h = (h << 1) + y[k]
            h &= 0xFF
        s = shifts[h]
        if s > 0:
            t += s
        else:
            j = t - m + 1
            if y[j : t + 1] == x:
                out.append(j)
            t += sh
    return out


def perfect_positions(x, y, q, shifts, sh, kind, final_hash):
    """Injective-scheme engine: a shift-0 window whose hash equals the
    pattern's final-gram hash already matches on its last q octets, so only
    the m-q leading octets are verified."""
    m = len(x)
    n = len(y)
    prefix = x[: m - q]
    plen = m - q
    out = []
    t = m - 1
    while t < n:
        h = y[t] if kind == PERFECT1 else ((y[t - 1] << 8) | y[t])
        if shifts[h] > 0:
            t += shifts[h]
        else:
            if h == final_hash:
                j = t - m + 1
                if y[j : j + plen] == prefix:
                    out.append(j)
            t += sh
    return out


def qgram_positions_counted(x, y, q, shifts, sh, kind):
    """qgram_positions plus the symbol-comparison count of every shift-0 attempt."""
    m = len(x)
    n = len(y)
    out = []
    counts = []
    t = m - 1
    while t < n:
        if kind == PERFECT1:
            h = y[t]
        elif kind == PERFECT2:
            h = (y[t - 1] << 8) | y[t]
        else:
            h = 0
            for k in range(t - q + 1, t + 1):
                h = (h << 1) + y[k]
            h &= 0xFF
        s = shifts[h]
        if s > 0:
            t += s
        else:
            j = t - m + 1
            compared = 0
            matched = True
            for k in range(m):
                compared += 1
                if y[j + k] != x[k]:
                    matched = False
                    break
            counts.append(compared)
            if matched:
                out.append(j)
            t += sh
    return out, counts


def perfect_positions_counted(x, y, q, shifts, sh, kind, final_hash):
    """perfect_positions plus the symbol-comparison count of every shift-0 attempt."""
    m = len(x)
    n = len(y)
    plen = m - q
    out = []
    counts = []
    t = m - 1
    while t < n:
        h = y[t] if kind == PERFECT1 else ((y[t - 1] << 8) | y[t])
        if shifts[h] > 0:
            t += shifts[h]
        else:
            compared = 0
            if h == final_hash:
                j = t - m + 1
                matched = True
                for k in range(plen):
                    compared += 1
                    if y[j + k] != x[k]:
                        matched = False
                        break
                if matched:
                    out.append(j)
            counts.append(compared)
            t += sh
    return out, counts
