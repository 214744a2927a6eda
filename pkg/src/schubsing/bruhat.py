"""
Bruhat order machinery: rank and difference tables, the reflection set
R(x, w), the restriction to moved positions, and the phi map relating
reflection sets across a Bruhat edge.

The difference table of a pair x <= w is the grid

    d_{x,w}(p, q) = r_w(p, q) - r_x(p, q),
    r_w(p, q) = #{i <= p : w(i) >= q},

defined for 0 <= p <= n and 1 <= q <= n+1 with zero boundaries.  Everything
here is pure and operates on tuple permutations from ``schubsing.perm``.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass, field

import numpy as np

from .perm import (
    Perm,
    Transposition,
    apply_transposition,
    inverse,
    length,
)


def rank(w: Perm, p: int, q: int) -> int:
    """
    The rank function ``r_w(p, q) = #{i <= p : w(i) >= q}``.

    >>> rank((3, 4, 1, 2), 2, 3)
    2
    """
    n = len(w)
    if not (0 <= p <= n and 1 <= q <= n + 1):
        raise ValueError(f"rank query ({p},{q}) out of bounds for n={n}")
    return sum(1 for i in range(p) if w[i] >= q)


def rank_matrix(w: Perm) -> np.ndarray:
    """Full table ``R[p][q] = r_w(p, q)`` with shape (n+1, n+2); column 0 unused."""
    n = len(w)
    grid = np.zeros((n + 1, n + 2), dtype=np.int64)
    for i, v in enumerate(w, start=1):
        grid[i, 1 : v + 1] = 1
    np.cumsum(grid, axis=0, out=grid)
    return grid


@dataclass(frozen=True)
class DiffTable:
    """
    The difference table of a pair (x, w), with the defining permutations.

    ``d[p][q]`` is valid for 0 <= p <= n, 1 <= q <= n+1; the boundary rows
    and columns are zero, and neighbouring entries differ by at most 1.
    """

    n: int
    x: Perm
    w: Perm
    d: np.ndarray = field(repr=False, compare=False)

    def min(self) -> int:
        return int(self.d[:, 1:].min())

    def dual(self) -> np.ndarray:
        """
        The dual table ``d'(p, q) = r'_w(p, q) - r'_x(p, q)`` with
        ``r'_w(p, q) = #{i >= p : w(i) <= q}``, indexed for 1 <= p <= n+1,
        0 <= q <= n (row n+1 and column 0 are zero boundaries).
        """
        n = self.n
        out = np.zeros((n + 2, n + 1), dtype=np.int64)
        for i in range(n, 0, -1):
            out[i, :] = out[i + 1, :]
            out[i, self.w[i - 1] :] += 1
            out[i, self.x[i - 1] :] -= 1
        return out


def diff_table(x: Perm, w: Perm) -> DiffTable:
    """
    Build the difference table for the pair (x, w).

    >>> diff_table((2, 1), (1, 2)).min()
    -1
    """
    if len(x) != len(w):
        raise ValueError("size mismatch")
    d = rank_matrix(w) - rank_matrix(x)
    return DiffTable(n=len(w), x=x, w=w, d=d)


def bruhat_leq(x: Perm, w: Perm) -> bool:
    """
    Bruhat order comparison: x <= w iff d_{x,w} is everywhere non-negative,
    equivalently iff every sorted prefix of x is dominated by that of w.

    >>> bruhat_leq((2, 1, 4, 3), (4, 2, 3, 1))
    True
    >>> bruhat_leq((2, 1), (1, 2))
    False
    """
    n = len(x)
    if n != len(w):
        raise ValueError("size mismatch")
    if x == w:
        return True
    px: list[int] = []
    pw: list[int] = []
    for p in range(n - 1):
        insort(px, x[p])
        insort(pw, w[p])
        for a, b in zip(px, pw):
            if a > b:
                return False
    return True


def raises_length_by_one(x: Perm, a: int, b: int) -> bool:
    """
    True iff ``x t_{a,b}`` covers ``x``: x(a) < x(b) and no position between
    a and b carries a value between x(a) and x(b).
    """
    xa, xb = x[a - 1], x[b - 1]
    if xa >= xb:
        return False
    return all(not xa < x[c] < xb for c in range(a, b - 1))


def covers_down(y: Perm) -> list[Perm]:
    """All Bruhat covers below y, i.e. the yt with l(yt) = l(y) - 1."""
    n = len(y)
    out = []
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            if y[a - 1] > y[b - 1] and all(
                not y[b - 1] < y[c] < y[a - 1] for c in range(a, b - 1)
            ):
                out.append(apply_transposition(y, a, b))
    return out


def reflection_set(x: Perm, w: Perm) -> frozenset[Transposition]:
    """
    The set R(x, w) = {t : x < xt <= w} of upward Bruhat edges at x inside
    the interval below w, computed by the shading criterion: swapping a < b
    lowers the difference table by one exactly on rows [a, b-1] and columns
    [x(a)+1, x(b)], so t_{a,b} lands below w iff x(a) < x(b) and d_{x,w} is
    at least 1 on that box.

    >>> sorted(reflection_set((2, 1, 5, 4, 3), (2, 4, 5, 3, 1)))
    [(2, 4), (2, 5)]
    """
    n = len(x)
    if n != len(w):
        raise ValueError("size mismatch")
    if not bruhat_leq(x, w):
        raise ValueError("x is not <= w in Bruhat order")
    # d >= 0 here, so "min over box >= 1" means "no zero in the box";
    # 2D prefix sums of the zero indicator give O(1) box queries.
    # Each d-row differs from the previous on one contiguous value segment.
    drow = [0] * (n + 2)
    s_prev = [0] * (n + 2)
    s = [s_prev]
    for p in range(1, n + 1):
        wp, xp = w[p - 1], x[p - 1]
        if wp > xp:
            for q in range(xp + 1, wp + 1):
                drow[q] += 1
        else:
            for q in range(wp + 1, xp + 1):
                drow[q] -= 1
        row = [0] * (n + 2)
        run = 0
        for q in range(1, n + 2):
            if drow[q] == 0:
                run += 1
            row[q] = s_prev[q] + run
        s.append(row)
        s_prev = row
    out = []
    for a in range(1, n):
        xa = x[a - 1]
        sa = s[a - 1]
        for b in range(a + 1, n + 1):
            xb = x[b - 1]
            if xa > xb:
                continue
            if s[b - 1][xb] - sa[xb] - s[b - 1][xa] + sa[xa] == 0:
                out.append((a, b))
    return frozenset(out)


def reflection_set_direct(x: Perm, w: Perm) -> frozenset[Transposition]:
    """R(x, w) straight from the definition; used to cross-check shading."""
    n = len(x)
    if not bruhat_leq(x, w):
        raise ValueError("x is not <= w in Bruhat order")
    out = []
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            if x[a - 1] < x[b - 1] and bruhat_leq(apply_transposition(x, a, b), w):
                out.append((a, b))
    return frozenset(out)


def delta_positions(x: Perm, w: Perm) -> IndexTuple:
    """
    The set of positions touched by some reflection in R(x, w), as a sorted
    tuple.  Empty exactly when x = w.
    """
    touched: set[int] = set()
    for a, b in reflection_set(x, w):
        touched.add(a)
        touched.add(b)
    return tuple(sorted(touched))


IndexTuple = tuple[int, ...]


def tilde_restrict(x: Perm, w: Perm) -> tuple[Perm, Perm]:
    """
    Flatten both x and w to the positions of ``delta_positions(x, w)``.

    Raises ``ValueError`` when the position set is empty (i.e. x = w).
    """
    from .perm import flatten

    delta = delta_positions(x, w)
    if not delta:
        raise ValueError("empty moved-position set: x equals w")
    return flatten(x, delta), flatten(w, delta)


def phi_map(y: Perm, w: Perm, t: Transposition, tp: Transposition) -> Transposition:
    """
    The map phi_t^{y,w} applied to a reflection tp in R(y, w), for a triple
    yt < y <= w.  Commuting reflections are fixed; otherwise the image is
    decided by the relative order of y on the three indices involved, which
    of the three boundary reflections tp is, and whether the wide reflection
    t_{a,c} lies in R(y, w).  The image always lands in R(yt, w) \\ {t}.
    """
    a1, b1 = t
    c1, d1 = tp
    if not (a1 < b1 and c1 < d1):
        raise ValueError("transpositions must be ordered pairs (a, b) with a < b")
    if y[a1 - 1] <= y[b1 - 1]:
        raise ValueError("need yt < y")
    r_y = reflection_set(y, w)  # validates y <= w
    if tp not in r_y:
        raise ValueError("tp is not in R(y, w)")
    return _phi(y, t, tp, r_y)


def _phi(y: Perm, t: Transposition, tp: Transposition, r_y: frozenset) -> Transposition:
    """phi with preconditions already established; r_y = R(y, w)."""
    a1, b1 = t
    c1, d1 = tp
    shared = {a1, b1} & {c1, d1}
    if not shared:
        return tp
    if len(shared) == 2:
        raise ValueError("t and tp coincide")

    a, b, c = sorted({a1, b1, c1, d1})
    pat = _fl3(y[a - 1], y[b - 1], y[c - 1])
    wide = (a, c)

    if pat == (2, 1, 3):
        # t = t_{a,b}; tp is t_{a,c} or t_{b,c}
        if tp == (a, c):
            return (b, c)
        if tp == (b, c):
            return wide if wide in r_y else (b, c)
    elif pat == (1, 3, 2):
        # t = t_{b,c}; tp is t_{a,c} or t_{a,b}
        if tp == (a, c):
            return (a, b)
        if tp == (a, b):
            return wide if wide in r_y else (a, b)
    elif pat == (3, 1, 2):
        # tp = t_{b,c}; t is t_{a,b} or t_{a,c}
        if tp == (b, c):
            return (a, c) if t == (a, b) else (b, c)
    elif pat == (2, 3, 1):
        # tp = t_{a,b}; t is t_{b,c} or t_{a,c}
        if tp == (a, b):
            return (a, c) if t == (b, c) else (a, b)
    raise ValueError(f"inconsistent phi arguments: pattern {pat}, t={t}, tp={tp}")


def _fl3(a: int, b: int, c: int) -> tuple[int, int, int]:
    vals = sorted((a, b, c))
    return (vals.index(a) + 1, vals.index(b) + 1, vals.index(c) + 1)


def extra_set(x: Perm, w: Perm, t: Transposition) -> frozenset[Transposition]:
    """
    The incompatible ("extra") reflections at x relative to the edge t:

        E_t(x, w) = R(x, w) \\ ({t} | phi_t(R(xt, w))),

    where phi_t is taken at the pair (xt, w).  Requires t in R(x, w).
    """
    r_x = reflection_set(x, w)
    if t not in r_x:
        raise ValueError(f"t={t} is not in R(x, w)")
    y = apply_transposition(x, *t)
    r_y = reflection_set(y, w)
    image = {_phi(y, t, tp, r_y) for tp in r_y}
    return frozenset(r_x - ({t} | image))


def region_signed_count(
    x: Perm, w: Perm, rows: tuple[int, int], cols: tuple[int, int]
) -> int:
    """
    The signed count over an inclusive rectangle R = rows x cols:

        #{p in rows : w(p) in cols} - #{p in rows : x(p) in cols}.

    Zero on the full grid and whenever x = w.
    """
    (a, b), (c, d) = rows, cols
    n = len(w)
    if not (1 <= a <= b <= n and 1 <= c <= d <= n):
        raise ValueError("region out of bounds")
    total = 0
    for p in range(a, b + 1):
        if c <= w[p - 1] <= d:
            total += 1
        if c <= x[p - 1] <= d:
            total -= 1
    return total


def interval_below(w: Perm) -> dict[Perm, int]:
    """
    The full Bruhat interval {v : v <= w}, found by descending covers from w
    with a memoized visited set.  Returns a dict mapping each element to its
    length (handy for smoothness counting).
    """
    lw = length(w)
    seen: dict[Perm, int] = {w: lw}
    frontier = [w]
    while frontier:
        nxt = []
        for y in frontier:
            ly = seen[y]
            for z in covers_down(y):
                if z not in seen:
                    seen[z] = ly - 1
                    nxt.append(z)
        frontier = nxt
    return seen
