"""
Exponential-scale ground truth for singular loci of Schubert varieties.

Everything here is deliberately simple and is meant to validate the
polynomial-time component enumeration at small n: tangent-space smoothness
at a T-fixed point, brute-force maximal singular loci over a whole Bruhat
interval, the family-based characterization of maximal singular points, and
the pattern-pair construction E_w whose maximal elements also describe the
singular locus.

All oracles enforce a size cap (default n <= 8) so that accidental large
inputs fail fast instead of running for hours.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import (
    Perm,
    apply_transposition,
    avoids_pattern,
    flatten,
    inverse,
    length,
    pattern_occurrences,
    unflatten,
)
from .bruhat import (
    bruhat_leq,
    interval_below,
    raises_length_by_one,
    reflection_set,
    tilde_restrict,
)

DEFAULT_BOUND = 8

PATTERN_4231 = (4, 2, 3, 1)
PATTERN_3412 = (3, 4, 1, 2)


def _check_bound(n: int, bound: int | None, what: str) -> None:
    cap = DEFAULT_BOUND if bound is None else bound
    if n > cap:
        raise ValueError(f"{what}: n={n} exceeds oracle bound {cap}")


@dataclass(frozen=True)
class SmoothnessReport:
    """Tangent-space data at the T-fixed point e_x of X_w."""

    x: Perm
    w: Perm
    r_count: int
    codim: int

    @property
    def smooth(self) -> bool:
        return self.r_count == self.codim


def is_smooth_point(x: Perm, w: Perm) -> SmoothnessReport:
    """
    Tangent-space smoothness test: X_w is smooth at e_x iff the number of
    upward Bruhat edges #R(x, w) equals the codimension l(w) - l(x).

    >>> is_smooth_point((1, 2, 3, 4), (3, 4, 1, 2)).smooth
    False
    """
    if not bruhat_leq(x, w):
        raise ValueError("x is not <= w in Bruhat order")
    return SmoothnessReport(
        x=x, w=w, r_count=len(reflection_set(x, w)), codim=length(w) - length(x)
    )


def is_smooth_variety(w: Perm) -> bool:
    """
    Global smoothness of X_w: true iff w avoids both 4231 and 3412.

    >>> is_smooth_variety((3, 4, 1, 2))
    False
    """
    return avoids_pattern(w, PATTERN_4231) and avoids_pattern(w, PATTERN_3412)


def _interval_r_counts(
    w: Perm,
) -> tuple[dict[Perm, int], dict[Perm, list[tuple[Perm, tuple[int, int]]]]]:
    """For each x <= w, the length of x and the list of (xt, t) with xt in (x, w]."""
    iv = interval_below(w)
    ups: dict[Perm, list[tuple[Perm, tuple[int, int]]]] = {}
    n = len(w)
    for x in iv:
        lst = []
        for a in range(1, n):
            for b in range(a + 1, n + 1):
                if x[a - 1] < x[b - 1]:
                    xt = apply_transposition(x, a, b)
                    if xt in iv:
                        lst.append((xt, (a, b)))
        ups[x] = lst
    return iv, ups


def singular_points(w: Perm, bound: int | None = None) -> set[Perm]:
    """All x <= w at which X_w is singular, by exhaustive tangent counting."""
    _check_bound(len(w), bound, "singular_points")
    lw = length(w)
    iv, ups = _interval_r_counts(w)
    return {x for x, lx in iv.items() if len(ups[x]) > lw - lx}


def bruhat_maximal(perms: set[Perm] | frozenset[Perm]) -> frozenset[Perm]:
    """The Bruhat-maximal elements of a finite set of permutations."""
    items = sorted(perms)
    out = []
    for x in items:
        if not any(y != x and bruhat_leq(x, y) for y in items):
            out.append(x)
    return frozenset(out)


def maxsing_bruteforce(w: Perm, bound: int | None = None) -> frozenset[Perm]:
    """
    The Bruhat-maximal singular T-fixed points of X_w, by exhaustive scan of
    the interval below w.  Empty iff X_w is smooth.

    >>> sorted(maxsing_bruteforce((3, 4, 1, 2)))
    [(1, 3, 2, 4)]
    """
    _check_bound(len(w), bound, "maxsing_bruteforce")
    return bruhat_maximal(singular_points(w, bound=bound))


def is_msp(x: Perm, w: Perm, bound: int | None = None) -> bool:
    """
    Maximal-singular-point test by the two tangent-count conditions:
    #R(x, w) exceeds l(w) - l(x), and every xt with t in R(x, w) is a
    smooth point of X_w.
    """
    _check_bound(len(w), bound, "is_msp")
    if not bruhat_leq(x, w):
        raise ValueError("x is not <= w in Bruhat order")
    lw = length(w)
    r_x = reflection_set(x, w)
    if len(r_x) <= lw - length(x):
        return False
    for a, b in r_x:
        xt = apply_transposition(x, a, b)
        if len(reflection_set(xt, w)) != lw - length(xt):
            return False
    return True


def is_msp_by_family(x: Perm, w: Perm) -> bool:
    """
    Maximal-singular-point test via the structural characterization: every
    reflection in R(x, w) must raise length by exactly one, and the pair
    flattened to the moved positions must be one of the canonical two-run or
    three-run family pairs.  Polynomial time; agrees with ``is_msp``.
    """
    from .maxsing_fast import family_params

    if not bruhat_leq(x, w):
        raise ValueError("x is not <= w in Bruhat order")
    if x == w:
        return False
    r_x = reflection_set(x, w)
    if not all(raises_length_by_one(x, a, b) for a, b in r_x):
        return False
    xt, wt = tilde_restrict(x, w)
    return family_params(xt, wt) is not None


def ew_members(w: Perm, bound: int | None = None) -> set[Perm]:
    """
    The set E_w: permutations x admitting a pattern pair (3412 in w with
    1324 in x, or 4231 in w with 2143 in x) on a shared value set, subject
    to the sandwich condition w_low <= x <= x_high <= w built by unflattening
    the partner patterns onto the chosen positions.
    """
    _check_bound(len(w), bound, "ew_members")
    rules = (
        (PATTERN_3412, (1, 3, 2, 4)),
        (PATTERN_4231, (2, 1, 4, 3)),
    )
    occs = [(pattern_occurrences(w, pw), pw, px) for pw, px in rules]
    members: set[Perm] = set()
    for x in interval_below(w):
        if x == w:
            continue
        xinv = inverse(x)
        for occ_list, pw, px in occs:
            hit = False
            for zw in occ_list:
                values = [w[p - 1] for p in zw]
                zx = tuple(sorted(xinv[v - 1] for v in values))
                if flatten(x, zx) != px:
                    continue
                w_low = unflatten(w, zw, px)
                x_high = unflatten(x, zx, pw)
                if (
                    bruhat_leq(w_low, x)
                    and bruhat_leq(x, x_high)
                    and bruhat_leq(x_high, w)
                ):
                    members.add(x)
                    hit = True
                    break
            if hit:
                break
    return members


def ew_maximal(w: Perm, bound: int | None = None) -> frozenset[Perm]:
    """
    The Bruhat-maximal elements of E_w; these index the irreducible
    components of the singular locus of X_w.

    >>> sorted(ew_maximal((3, 4, 1, 2)))
    [(1, 3, 2, 4)]
    """
    return bruhat_maximal(ew_members(w, bound=bound))
