"""Pure-Python/numpy reference implementation of the walk kernels.

Same contracts as the compiled module `_fast`; all outputs are integer
arrays, so the two backends agree exactly.  Scalar functions process one
path; the ``batch_*`` functions vectorize across paths (one numpy pass per
step) for the rectangular single-letter-increment case that dominates the
experiment workloads.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"


def walk_lens(letters, step_ends=None):
    """Reduce a letter stream; return (word length after each step, final stack).

    `letters` is a uint8 code array; `step_ends` gives the cumulative letter
    count after each step (None means one letter per step).
    """
    letters = np.asarray(letters, dtype=np.uint8)
    stack = np.empty(len(letters), dtype=np.uint8)
    h = 0
    if step_ends is None:
        lens = np.empty(len(letters), dtype=np.int64)
        for i, c in enumerate(letters):
            c = int(c)
            if h and stack[h - 1] == c ^ 1:
                h -= 1
            else:
                stack[h] = c
                h += 1
            lens[i] = h
    else:
        step_ends = np.asarray(step_ends, dtype=np.int64)
        lens = np.empty(len(step_ends), dtype=np.int64)
        j = 0
        while j < len(step_ends) and step_ends[j] == 0:
            lens[j] = 0
            j += 1
        for i in range(len(letters)):
            c = int(letters[i])
            if h and stack[h - 1] == c ^ 1:
                h -= 1
            else:
                stack[h] = c
                h += 1
            while j < len(step_ends) and step_ends[j] == i + 1:
                lens[j] = h
                j += 1
        while j < len(lens):
            lens[j] = h
            j += 1
    return lens, stack[:h].copy()


def walk_lcp(letters, final, step_ends=None):
    """Second pass: c[m] = length of the common prefix of the word after step m with `final`."""
    letters = np.asarray(letters, dtype=np.uint8)
    final = np.asarray(final, dtype=np.uint8)
    nf = len(final)
    h = 0
    c = 0
    stack = np.empty(len(letters), dtype=np.uint8)
    if step_ends is None:
        out = np.empty(len(letters), dtype=np.int64)
        for i in range(len(letters)):
            lt = int(letters[i])
            if h and stack[h - 1] == lt ^ 1:
                h -= 1
                if c > h:
                    c = h
            else:
                if c == h and h < nf and final[h] == lt:
                    c += 1
                stack[h] = lt
                h += 1
            out[i] = c
        return out
    step_ends = np.asarray(step_ends, dtype=np.int64)
    out = np.empty(len(step_ends), dtype=np.int64)
    j = 0
    while j < len(step_ends) and step_ends[j] == 0:
        out[j] = 0
        j += 1
    for i in range(len(letters)):
        lt = int(letters[i])
        if h and stack[h - 1] == lt ^ 1:
            h -= 1
            if c > h:
                c = h
        else:
            if c == h and h < nf and final[h] == lt:
                c += 1
            stack[h] = lt
            h += 1
        while j < len(step_ends) and step_ends[j] == i + 1:
            out[j] = c
            j += 1
    while j < len(out):
        out[j] = c
        j += 1
    return out


def snapshot(letters, nletters):
    """Reduced word (stack) after consuming the first `nletters` letters."""
    letters = np.asarray(letters, dtype=np.uint8)
    stack = np.empty(nletters, dtype=np.uint8)
    h = 0
    for i in range(nletters):
        c = int(letters[i])
        if h and stack[h - 1] == c ^ 1:
            h -= 1
        else:
            stack[h] = c
            h += 1
    return stack[:h].copy()


def axis_offsets(xi, v0, c0f, c0b, per_f, per_b, t_lo, t_hi):
    """Tree distance from conj^-1 * xi[:t] to the periodic line, for t in [t_lo, t_hi].

    The line through the identity has forward ray per_f^inf and backward ray
    per_b^inf; matches extend in O(1) per pushed letter, pops clamp them.
    d(v, line) = |v| - max(match_f, match_b).
    """
    xi = np.asarray(xi, dtype=np.uint8)
    v0 = np.asarray(v0, dtype=np.uint8)
    per_f = np.asarray(per_f, dtype=np.uint8)
    per_b = np.asarray(per_b, dtype=np.uint8)
    n = len(per_f)
    stack = np.empty(len(v0) + len(xi) + 1, dtype=np.uint8)
    stack[: len(v0)] = v0
    h = len(v0)
    cf, cb = c0f, c0b
    out = np.empty(t_hi - t_lo + 1, dtype=np.int64)
    for t in range(1, t_hi + 1):
        lt = int(xi[t - 1])
        if h and stack[h - 1] == lt ^ 1:
            h -= 1
            if cf > h:
                cf = h
            if cb > h:
                cb = h
        else:
            if cf == h and per_f[h % n] == lt:
                cf += 1
            if cb == h and per_b[h % n] == lt:
                cb += 1
            stack[h] = lt
            h += 1
        if t >= t_lo:
            out[t - t_lo] = h - max(cf, cb)
    return out


def batch_final_len(letters2d):
    """Final reduced word length per row for a rectangular letter matrix (one letter per step)."""
    letters2d = np.ascontiguousarray(letters2d, dtype=np.uint8)
    p, n = letters2d.shape
    stack = np.zeros((p, n + 1), dtype=np.uint8)
    lens = np.zeros(p, dtype=np.int64)
    rows = np.arange(p)
    for t in range(n):
        lt = letters2d[:, t]
        top = stack[rows, np.maximum(lens - 1, 0)]
        cancel = (lens > 0) & (top == (lt ^ 1))
        lens[cancel] -= 1
        push = ~cancel
        stack[rows[push], lens[push]] = lt[push]
        lens[push] += 1
    return lens


def batch_boundary(letters2d, window_start):
    """Per-row boundary data for a rectangular letter matrix.

    Returns (depths, finals, final_lens): `depths[r]` is the largest depth D
    such that the first D letters of the final word are a prefix of every
    word from step `window_start` (0-based, inclusive) onward; `finals[r]`
    is the final stack padded row.
    """
    letters2d = np.ascontiguousarray(letters2d, dtype=np.uint8)
    p, n = letters2d.shape
    rows = np.arange(p)

    stack = np.zeros((p, n + 1), dtype=np.uint8)
    lens = np.zeros(p, dtype=np.int64)
    for t in range(n):
        lt = letters2d[:, t]
        top = stack[rows, np.maximum(lens - 1, 0)]
        cancel = (lens > 0) & (top == (lt ^ 1))
        lens[cancel] -= 1
        push = ~cancel
        stack[rows[push], lens[push]] = lt[push]
        lens[push] += 1
    finals = stack
    final_lens = lens.copy()

    lens2 = np.zeros(p, dtype=np.int64)
    c = np.zeros(p, dtype=np.int64)
    depth = np.full(p, np.iinfo(np.int64).max, dtype=np.int64)
    stack2 = np.zeros((p, n + 1), dtype=np.uint8)
    for t in range(n):
        lt = letters2d[:, t]
        top = stack2[rows, np.maximum(lens2 - 1, 0)]
        cancel = (lens2 > 0) & (top == (lt ^ 1))
        lens2[cancel] -= 1
        np.minimum(c, lens2, out=c)
        push = ~cancel
        fin_at_h = finals[rows, np.minimum(lens2, final_lens)]
        extend = push & (c == lens2) & (lens2 < final_lens) & (fin_at_h == lt)
        stack2[rows[push], lens2[push]] = lt[push]
        lens2[push] += 1
        c[extend] += 1
        if t >= window_start:
            np.minimum(depth, c, out=depth)
    np.minimum(depth, final_lens, out=depth)
    return depth, finals, final_lens
