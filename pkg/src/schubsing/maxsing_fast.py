"""
Polynomial-time enumeration of the irreducible components of the singular
locus of a Schubert variety X_w in SL(n)/B.

Each component is indexed by a permutation x obtained from w by a single
cycle on a 4231, 3412, or 45312 configuration: two interleaved decreasing
position sequences alpha (length m) and beta (length k), subject to case
conditions and to emptiness of certain staircase regions of the permutation
matrix.  The three cases:

* 4231: alpha_1 < beta_1,...,beta_{k-1} < alpha_2,...,alpha_m < beta_k with
  w(alpha_m) > w(beta_1) and k, m >= 2.
* 3412: beta_1,...,beta_{k-1} < alpha_1 < beta_k < alpha_2,...,alpha_m with
  w(alpha_{m-1}) > w(beta_1) > w(alpha_m) > w(beta_2) and k, m >= 2.
* 45312: k = m = 2, beta_1 < alpha_1 < beta_2 < alpha_2 with
  w(alpha_1) > w(beta_1) > w(alpha_2) > w(beta_2), and the entries of the
  matrix of w inside the box (alpha_1, beta_2) x (w(alpha_2), w(beta_1))
  in decreasing order.

The forbidden regions are the open staircase bands where the difference
table of the resulting pair (x, w) is positive; a configuration yields a
component exactly when no other entry of w sits inside them.  Enumeration
runs over O(n^4) candidate frames (the four extremal positions of a
configuration), reconstructs the forced interior positions per frame, and
filters every candidate through ``verify_component``.

The canonical flattened shapes are

    x_[k,m]   = [k,...,1, k+m,...,k+1]
    w_[k,m]   = [k+m, k,...,2, k+m-1,...,k+1, 1]              (k, m >= 2)
    x_[k,l,m] = [k,...,1, k+l,...,k+1, k+l+m,...,k+l+1]
    w_[k,l,m] = [k+l, k,...,2, k+l+m, k+l-1,...,k+2, 1,
                 k+l+m-1,...,k+l+1, k+1]    (l = 2, k,m >= 1 or k = m = 1)

and a point x <= w is a maximal singular point exactly when every upward
Bruhat edge at x raises length by one and the pair restricted to the moved
positions equals one of these shapes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Perm, apply_cycle, as_perm, pattern_occurrences

PATTERN_4231 = (4, 2, 3, 1)
PATTERN_3412 = (3, 4, 1, 2)

CASE_4231 = "4231"
CASE_3412 = "3412"
CASE_45312 = "45312"


@dataclass(frozen=True)
class Component:
    """
    One irreducible component of the singular locus of X_w: the case tag,
    the alpha and beta position sequences (w strictly decreasing on each),
    and the indexing permutation x = w composed with the cycle
    (alpha_1, ..., alpha_m, beta_k, ..., beta_1).
    """

    case: str
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    x: Perm


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of a canonical flattened family pair."""

    variant: str  # "two_runs" or "three_runs"
    k: int
    m: int
    l: int | None = None


def canonical_family(params: FamilyParams) -> tuple[Perm, Perm]:
    """
    The canonical pair (x, w) for the given family parameters.

    >>> canonical_family(FamilyParams("two_runs", 2, 2))
    ((2, 1, 4, 3), (4, 2, 3, 1))
    >>> canonical_family(FamilyParams("three_runs", 1, 1, l=3))
    ((1, 4, 3, 2, 5), (4, 5, 3, 1, 2))
    """
    k, m, l = params.k, params.m, params.l
    if params.variant == "two_runs":
        if l is not None:
            raise ValueError("two_runs takes no l parameter")
        if k < 2 or m < 2:
            raise ValueError("two_runs requires k, m >= 2")
        x = tuple(range(k, 0, -1)) + tuple(range(k + m, k, -1))
        w = (
            (k + m,)
            + tuple(range(k, 1, -1))
            + tuple(range(k + m - 1, k, -1))
            + (1,)
        )
        return x, w
    if params.variant == "three_runs":
        if l is None or l < 2 or k < 1 or m < 1:
            raise ValueError("three_runs requires k, m >= 1 and l >= 2")
        if l > 2 and (k > 1 or m > 1):
            raise ValueError("three_runs with l > 2 requires k = m = 1")
        x = (
            tuple(range(k, 0, -1))
            + tuple(range(k + l, k, -1))
            + tuple(range(k + l + m, k + l, -1))
        )
        w = (
            (k + l,)
            + tuple(range(k, 1, -1))
            + (k + l + m,)
            + tuple(range(k + l - 1, k + 1, -1))
            + (1,)
            + tuple(range(k + l + m - 1, k + l, -1))
            + (k + 1,)
        )
        return x, w
    raise ValueError(f"unknown family variant {params.variant!r}")


def family_params(xt: Perm, wt: Perm) -> FamilyParams | None:
    """
    Match a flattened pair against the canonical families; None if neither
    family fits.
    """
    n = len(xt)
    if n != len(wt) or n < 4:
        return None
    k = xt[0]
    if 2 <= k <= n - 2:
        params = FamilyParams("two_runs", k, n - k)
        if canonical_family(params) == (xt, wt):
            return params
    if 1 <= k < n:
        l = xt[k] - k
        m = n - k - l
        if l >= 2 and m >= 1 and (l == 2 or k == m == 1):
            params = FamilyParams("three_runs", k, m, l=l)
            if canonical_family(params) == (xt, wt):
                return params
    return None


class _PrefixCounts:
    """O(1) rectangle counts over the permutation matrix of w."""

    def __init__(self, w: Perm):
        n = len(w)
        self.n = n
        rows = [[0] * (n + 1)]
        for p in range(1, n + 1):
            row = rows[-1][:]
            for v in range(w[p - 1], n + 1):
                row[v] += 1
            rows.append(row)
        self._rows = rows

    def count_open(self, p1: int, p2: int, v1: int, v2: int) -> int:
        """Number of entries (p, w(p)) with p1 < p < p2 and v1 < w(p) < v2."""
        if p2 - p1 < 2 or v2 - v1 < 2:
            return 0
        rows = self._rows
        return (
            rows[p2 - 1][v2 - 1]
            - rows[p1][v2 - 1]
            - rows[p2 - 1][v1]
            + rows[p1][v1]
        )


def _tight_pairs(w: Perm) -> list[tuple[int, int]]:
    """
    All position pairs (p, q) with p < q, w(p) > w(q), and no position
    between them carrying a value between w(q) and w(p).
    """
    n = len(w)
    out = []
    for p in range(1, n):
        wp = w[p - 1]
        best_below = 0
        for q in range(p + 1, n + 1):
            wq = w[q - 1]
            if wq < wp:
                if wq > best_below:
                    out.append((p, q))
                    best_below = wq
        # values >= wp never block: the band is capped by wp
    return out


def _decreasing(w: Perm, seq: tuple[int, ...]) -> bool:
    return all(w[a - 1] > w[b - 1] for a, b in zip(seq, seq[1:]))


def _strictly_increasing(seq: tuple[int, ...]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


def verify_component(w: Perm, comp: Component, _pc: _PrefixCounts | None = None) -> bool:
    """
    Check every defining condition of a candidate component against w: the
    shape and interleaving of the position sequences, the case's value
    chain, emptiness of the forbidden staircase regions, and agreement of
    ``comp.x`` with the cycle action.  Used as the final filter of
    ``enumerate_components`` and exposed for independent testing.
    """
    n = len(w)
    alphas, betas = comp.alphas, comp.betas
    if not alphas or not betas:
        return False
    if set(alphas) & set(betas):
        return False
    if not (_strictly_increasing(alphas) and _strictly_increasing(betas)):
        return False
    if any(not 1 <= p <= n for p in alphas + betas):
        return False
    if not (_decreasing(w, alphas) and _decreasing(w, betas)):
        return False
    k, m = len(betas), len(alphas)
    pc = _pc if _pc is not None else _PrefixCounts(w)

    if comp.case == CASE_4231:
        if k < 2 or m < 2:
            return False
        # alpha_1 < beta_1 .. beta_{k-1} < alpha_2 .. alpha_m < beta_k
        if not (alphas[0] < betas[0] and betas[k - 2] < alphas[1] < betas[-1]):
            return False
        if alphas[-1] >= betas[-1]:
            return False
        if w[alphas[-1] - 1] <= w[betas[0] - 1]:
            return False
        if not _staircase_zones_empty(w, pc, alphas, betas):
            return False
    elif comp.case == CASE_3412:
        if k < 2 or m < 2:
            return False
        # beta_1 .. beta_{k-1} < alpha_1 < beta_k < alpha_2 .. alpha_m
        if not (betas[k - 2] < alphas[0] < betas[-1] < alphas[1]):
            return False
        chain = (
            w[alphas[-2] - 1] > w[betas[0] - 1] > w[alphas[-1] - 1] > w[betas[1] - 1]
        )
        if not chain:
            return False
        if not _staircase_zones_empty(w, pc, alphas, betas):
            return False
    elif comp.case == CASE_45312:
        if k != 2 or m != 2:
            return False
        b1, b2 = betas
        a1, a2 = alphas
        if not b1 < a1 < b2 < a2:
            return False
        if not (w[a1 - 1] > w[b1 - 1] > w[a2 - 1] > w[b2 - 1]):
            return False
        if not _box_zones_empty_45312(w, pc, a1, a2, b1, b2):
            return False
    else:
        return False

    cycle = alphas + tuple(reversed(betas))
    return comp.x == apply_cycle(w, cycle)


def _staircase_zones_empty(
    w: Perm, pc: _PrefixCounts, alphas: tuple[int, ...], betas: tuple[int, ...]
) -> bool:
    """
    Region emptiness for the 4231 and 3412 cases.  Between consecutive
    configuration positions s < s', entries of w with value strictly inside
    (lo, hi) are forbidden, where hi is the w-value of the last alpha at or
    before s (else of beta_1) and lo is the w-value of the first beta after
    s (else of alpha_m).
    """
    alpha_set = set(alphas)
    support = sorted(alphas + betas)
    fallback_hi = w[betas[0] - 1]
    fallback_lo = w[alphas[-1] - 1]

    # next-beta value after each support index
    next_beta: list[int | None] = [None] * len(support)
    nb: int | None = None
    for i in range(len(support) - 1, -1, -1):
        next_beta[i] = nb
        if support[i] not in alpha_set:
            nb = w[support[i] - 1]

    last_alpha: int | None = None
    for i in range(len(support) - 1):
        s = support[i]
        if s in alpha_set:
            last_alpha = w[s - 1]
        hi = last_alpha if last_alpha is not None else fallback_hi
        lo = next_beta[i] if next_beta[i] is not None else fallback_lo
        if pc.count_open(s, support[i + 1], lo, hi):
            return False
    return True


def _box_zones_empty_45312(
    w: Perm, pc: _PrefixCounts, a1: int, a2: int, b1: int, b2: int
) -> bool:
    """
    Region emptiness for the 45312 case.  The outer gaps must be clear; in
    the middle gap only the box (a1, b2) x (w(a2), w(b1)) may hold entries,
    and those must appear in decreasing order.
    """
    wa1, wa2, wb1, wb2 = w[a1 - 1], w[a2 - 1], w[b1 - 1], w[b2 - 1]
    if pc.count_open(b1, a1, wb2, wb1):
        return False
    if pc.count_open(b2, a2, wa2, wa1):
        return False
    if pc.count_open(a1, b2, wb2, wa2) or pc.count_open(a1, b2, wb1, wa1):
        return False
    prev = None
    for e in range(a1 + 1, b2):
        v = w[e - 1]
        if wa2 < v < wb1:
            if prev is not None and v > prev:
                return False
            prev = v
    return True


def _chain_min_left_to_right(cands: list[tuple[int, int]]) -> list[int]:
    """Positions of the successive value minima, scanning left to right."""
    out = []
    cur = None
    for e, v in cands:
        if cur is None or v < cur:
            out.append(e)
            cur = v
    return out


def _chain_max_right_to_left(cands: list[tuple[int, int]]) -> list[int]:
    """Positions of the successive value maxima, scanning right to left."""
    out = []
    cur = None
    for e, v in reversed(cands):
        if cur is None or v > cur:
            out.append(e)
            cur = v
    out.reverse()
    return out


def _component(w: Perm, case: str, alphas: tuple[int, ...], betas: tuple[int, ...]) -> Component:
    x = apply_cycle(w, alphas + tuple(reversed(betas)))
    return Component(case, alphas, betas, x)


def _enumerate_4231(
    w: Perm, pc: _PrefixCounts, pairs: list[tuple[int, int]], tails: dict[int, list[int]]
) -> list[Component]:
    n = len(w)
    out = []
    for a, b in pairs:
        wa, wb = w[a - 1], w[b - 1]
        blocking = n + 1  # min value > wb seen between b and the running c
        for c in range(b + 1, n + 1):
            wc = w[c - 1]
            if wc > wb:
                if wc < wa and wc < blocking and c in tails:
                    for d in tails[c]:
                        if w[d - 1] < wb:
                            comp = _build_4231(w, pc, a, b, c, d)
                            if comp is not None:
                                out.append(comp)
                blocking = min(blocking, wc)
        # frame (a, b, c, d): a 4231 occurrence with the three framing
        # rectangles (a,b), (b,c), (c,d) free of interior entries
    return out


def _build_4231(
    w: Perm, pc: _PrefixCounts, a: int, b: int, c: int, d: int
) -> Component | None:
    wa, wb, wc, wd = w[a - 1], w[b - 1], w[c - 1], w[d - 1]
    acands: list[tuple[int, int]] = []
    bcands: list[tuple[int, int]] = []
    for e in range(b + 1, c):
        v = w[e - 1]
        if wc < v < wa:
            acands.append((e, v))
        elif wd < v < wb:
            bcands.append((e, v))
    alphas = (a, *_chain_min_left_to_right(acands), c)
    betas = (b, *_chain_max_right_to_left(bcands), d)
    comp = _component(w, CASE_4231, alphas, betas)
    return comp if verify_component(w, comp, pc) else None


def _enumerate_3412(
    w: Perm, pc: _PrefixCounts, pairs: list[tuple[int, int]]
) -> list[Component]:
    n = len(w)
    out = []
    for p2, p3 in pairs:
        w2, w3 = w[p2 - 1], w[p3 - 1]
        firsts = [p1 for p1 in range(1, p2) if w3 < w[p1 - 1] < w2]
        if not firsts:
            continue
        lasts = [p4 for p4 in range(p3 + 1, n + 1) if w3 < w[p4 - 1] < w2]
        if not lasts:
            continue
        for p1 in firsts:
            w1 = w[p1 - 1]
            for p4 in lasts:
                w4 = w[p4 - 1]
                if w4 >= w1:
                    continue
                if pc.count_open(p1, p2, w4, w1) or pc.count_open(p3, p4, w4, w1):
                    continue
                comp = _build_3412(w, pc, p1, p2, p3, p4)
                if comp is not None:
                    out.append(comp)
    return out


def _build_3412(
    w: Perm, pc: _PrefixCounts, p1: int, p2: int, p3: int, p4: int
) -> Component | None:
    w1, w2, w3, w4 = w[p1 - 1], w[p2 - 1], w[p3 - 1], w[p4 - 1]
    bcands = [(e, w[e - 1]) for e in range(p1 + 1, p2) if w3 < w[e - 1] < w4]
    acands = [(e, w[e - 1]) for e in range(p3 + 1, p4) if w1 < w[e - 1] < w2]
    betas = (p1, *_chain_max_right_to_left(bcands), p3)
    alphas = (p2, *_chain_min_left_to_right(acands), p4)
    comp = _component(w, CASE_3412, alphas, betas)
    return comp if verify_component(w, comp, pc) else None


def _enumerate_45312(w: Perm, pc: _PrefixCounts) -> list[Component]:
    n = len(w)
    out = []
    for p2 in range(2, n - 1):
        w2 = w[p2 - 1]
        for p3 in range(p2 + 2, n):
            w3 = w[p3 - 1]
            if w3 >= w2:
                continue
            if not pc.count_open(p2, p3, w3, w2):
                continue  # empty middle box: the 3412 case covers it
            mid = []
            ok = True
            for e in range(p2 + 1, p3):
                v = w[e - 1]
                if w3 < v < w2:
                    if mid and v > mid[-1]:
                        ok = False
                        break
                    mid.append(v)
            if not ok:
                continue
            vmax, vmin = mid[0], mid[-1]
            firsts = [
                p1
                for p1 in range(1, p2)
                if vmax < w[p1 - 1] < w2 and not pc.count_open(p1, p2, w3, w[p1 - 1])
            ]
            if not firsts:
                continue
            lasts = [
                p4
                for p4 in range(p3 + 1, n + 1)
                if w3 < w[p4 - 1] < vmin and not pc.count_open(p3, p4, w[p4 - 1], w2)
            ]
            for p1 in firsts:
                for p4 in lasts:
                    comp = _component(w, CASE_45312, (p2, p4), (p1, p3))
                    if verify_component(w, comp, pc):
                        out.append(comp)
    return out


def enumerate_components(w: Perm) -> list[Component]:
    """
    All irreducible components of the singular locus of X_w, deduplicated
    by the indexing permutation x and sorted by it.  Empty exactly when w
    avoids both 4231 and 3412.

    >>> [c.x for c in enumerate_components((3, 4, 1, 2))]
    [(1, 3, 2, 4)]
    """
    w = as_perm(w)
    n = len(w)
    if n < 4:
        return []
    pc = _PrefixCounts(w)
    pairs = _tight_pairs(w)
    tails: dict[int, list[int]] = {}
    for p, q in pairs:
        tails.setdefault(p, []).append(q)
    comps = (
        _enumerate_4231(w, pc, pairs, tails)
        + _enumerate_3412(w, pc, pairs)
        + _enumerate_45312(w, pc)
    )
    comps.sort(key=lambda comp: (comp.x, comp.case, comp.alphas, comp.betas))
    seen: set[Perm] = set()
    out = []
    for comp in comps:
        if comp.x not in seen:
            seen.add(comp.x)
            out.append(comp)
    return out


def maxsing(w: Perm) -> frozenset[Perm]:
    """
    The set of permutations indexing the irreducible components of the
    singular locus of X_w.

    >>> sorted(maxsing((7, 4, 3, 2, 6, 5, 1)))
    [(4, 3, 2, 1, 7, 6, 5)]
    """
    return frozenset(comp.x for comp in enumerate_components(w))


# Useless-pattern table: an occurrence of the right pattern is discarded
# when it arises as the designated sub-occurrence of the left pattern.
USELESS_PATTERNS: tuple[tuple[Perm, Perm], ...] = (
    ((5, 2, 3, 4, 1), (5, 2, 4, 1)),
    ((5, 2, 4, 3, 1), (5, 2, 4, 1)),
    ((5, 3, 2, 4, 1), (5, 2, 4, 1)),
    ((5, 3, 4, 2, 1), (5, 3, 4, 1)),
    ((5, 4, 2, 3, 1), (5, 2, 3, 1)),
    ((3, 5, 4, 1, 2), (3, 5, 1, 2)),
    ((4, 3, 5, 1, 2), (4, 5, 1, 2)),
    ((4, 5, 1, 3, 2), (4, 5, 1, 2)),
    ((4, 5, 2, 1, 3), (4, 5, 1, 3)),
    ((6, 3, 5, 2, 4, 1), (6, 3, 4, 1)),
    ((5, 6, 3, 4, 1, 2), (5, 6, 1, 2)),
    ((5, 2, 6, 4, 1, 3), (5, 6, 1, 3)),
    ((4, 6, 3, 1, 5, 2), (4, 6, 1, 2)),
)


def _sub_positions(left: Perm, right: Perm) -> tuple[int, ...]:
    """Positions of the right pattern's letters inside the left pattern."""
    pos = sorted(left.index(v) + 1 for v in right)
    sub = tuple(left[p - 1] for p in pos)
    if sub != right:
        raise ValueError(f"{right} is not a subsequence of {left}")
    return tuple(pos)


_USELESS_SUBS = tuple(
    (left, _sub_positions(left, right)) for left, right in USELESS_PATTERNS
)


def useful_pattern_count(w: Perm) -> int:
    """
    The number of 4231 and 3412 occurrences in w that index components of
    the singular locus: all occurrences minus the "useless" ones discarded
    by the length-5/6 pattern table.  Equals ``len(maxsing(w))``.

    >>> useful_pattern_count((7, 4, 3, 2, 6, 5, 1))
    1
    """
    w = as_perm(w)
    occ: set[tuple[int, ...]] = set(pattern_occurrences(w, PATTERN_4231))
    occ |= set(pattern_occurrences(w, PATTERN_3412))
    if not occ:
        return 0
    marked: set[tuple[int, ...]] = set()
    for left, sub in _USELESS_SUBS:
        for hit in pattern_occurrences(w, left):
            marked.add(tuple(hit[p - 1] for p in sub))
    return len(occ - marked)
