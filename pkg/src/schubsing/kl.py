"""
Kazhdan-Lusztig polynomials P_{x,w} for the symmetric group.

Polynomials in q are plain coefficient tuples, index = power of q, with
trailing zeros trimmed; the zero polynomial is the empty tuple.  Two
computations are provided:

* ``kl_recursive``: the defining recursion, as a small-n oracle.  P_{x,w}
  is 0 unless x <= w, is 1 when l(w) - l(x) <= 2, satisfies the degree
  bound deg <= (l(w) - l(x) - 1)/2, and otherwise unfolds along a right
  descent s of w:

      P_{x,w} = q^c P_{x,ws} + q^{1-c} P_{xs,ws}
                - sum over x <= z < ws with zs < z of
                  mu(z, ws) q^{(l(w)-l(z))/2} P_{x,z},

  with c = 1 if xs < x else 0 and mu(z, v) the coefficient of
  q^{(l(v)-l(z)-1)/2} in P_{z,v} (zero when that exponent is not a
  non-negative integer).  The pivot s is fixed as the largest right
  descent, making memo traces reproducible.

* ``kl_at_msp``: closed forms at maximal singular points.  Writing the
  moved-position restriction of (x, w) as a canonical family pair,

      two-run family (k, m):         1 + q + ... + q^(min(k,m) - 1)
      three-run family (k, 2, m):    1 + q
      three-run family (1, l, 1):    1 + q^(l-1),

  which agree with the recursion since P is invariant under restriction to
  the moved positions.
"""

from __future__ import annotations

from .perm import Perm, apply_simple, length, right_descents
from .bruhat import bruhat_leq, interval_below, raises_length_by_one, reflection_set, tilde_restrict
from .maxsing_fast import FamilyParams, family_params

KLPoly = tuple[int, ...]

ZERO: KLPoly = ()
ONE: KLPoly = (1,)

DEFAULT_BOUND = 7


def poly_trim(coeffs: list[int]) -> KLPoly:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def poly_add(a: KLPoly, b: KLPoly) -> KLPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_sub_scaled_shift(a: KLPoly, b: KLPoly, scale: int, shift: int) -> KLPoly:
    """a - scale * q^shift * b, trimmed."""
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for i, c in enumerate(b):
        out[shift + i] -= scale * c
    return poly_trim(out)


def poly_shift(a: KLPoly, shift: int) -> KLPoly:
    return ((0,) * shift + a) if a else ZERO


def format_poly(p: KLPoly) -> str:
    """
    Ascending-power text form.

    >>> format_poly((1, 0, 0, 1))
    '1 + q^3'
    >>> format_poly((1, 2, 1))
    '1 + 2q + q^2'
    """
    if not p:
        return "0"
    terms = []
    for e, c in enumerate(p):
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            q = "q" if e == 1 else f"q^{e}"
            terms.append(q if c == 1 else f"{c}{q}")
    return " + ".join(terms) if terms else "0"


class KLCache:
    """Shared memo for repeated Kazhdan-Lusztig computations."""

    def __init__(self) -> None:
        self.poly: dict[tuple[Perm, Perm], KLPoly] = {}
        self.interval: dict[Perm, dict[Perm, int]] = {}

    def interval_below(self, w: Perm) -> dict[Perm, int]:
        iv = self.interval.get(w)
        if iv is None:
            iv = interval_below(w)
            self.interval[w] = iv
        return iv


def kl_recursive(
    x: Perm, w: Perm, bound: int | None = None, cache: KLCache | None = None
) -> KLPoly:
    """
    P_{x,w} by the defining recursion, memoized over the interval.  The
    optional ``cache`` may be shared across calls; by default each call
    owns a private one.

    >>> format_poly(kl_recursive((2, 1, 4, 3), (4, 2, 3, 1)))
    '1 + q'
    """
    if len(x) != len(w):
        raise ValueError("size mismatch")
    cap = DEFAULT_BOUND if bound is None else bound
    if len(w) > cap:
        raise ValueError(f"kl_recursive: n={len(w)} exceeds bound {cap}")
    ctx = cache if cache is not None else KLCache()
    return _kl(x, w, ctx)


def _kl(x: Perm, w: Perm, ctx: KLCache) -> KLPoly:
    if x == w:
        return ONE
    key = (x, w)
    hit = ctx.poly.get(key)
    if hit is not None:
        return hit
    if not bruhat_leq(x, w):
        res: KLPoly = ZERO
    else:
        lw, lx = length(w), length(x)
        if lw - lx <= 2:
            res = ONE
        else:
            i = right_descents(w)[-1]
            ws = apply_simple(w, i)
            xs = apply_simple(x, i)
            c = 1 if x[i - 1] > x[i] else 0
            res = poly_add(poly_shift(_kl(x, ws, ctx), c), poly_shift(_kl(xs, ws, ctx), 1 - c))
            lws = lw - 1
            for z, lz in ctx.interval_below(ws).items():
                # need x <= z < ws with zs < z; z = x itself counts when xs < x
                if lz < lx or z[i - 1] < z[i] or (lws - lz) % 2 == 0:
                    continue
                if z != x and (lz == lx or not bruhat_leq(x, z)):
                    continue
                mu = _mu(z, ws, lws - lz, ctx)
                if mu:
                    res = poly_sub_scaled_shift(res, _kl(x, z, ctx), mu, (lw - lz) // 2)
    ctx.poly[key] = res
    return res


def _mu(z: Perm, v: Perm, ldiff: int, ctx: KLCache) -> int:
    e = (ldiff - 1) // 2
    p = _kl(z, v, ctx)
    return p[e] if e < len(p) else 0


def mu_coefficient(
    z: Perm, w: Perm, bound: int | None = None, cache: KLCache | None = None
) -> int:
    """
    The coefficient mu(z, w) of q^((l(w)-l(z)-1)/2) in P_{z,w}; zero when
    that exponent is not a non-negative integer.

    >>> mu_coefficient((2, 1, 4, 3), (4, 2, 3, 1))
    1
    """
    if len(z) != len(w):
        raise ValueError("size mismatch")
    ldiff = length(w) - length(z)
    if ldiff <= 0 or ldiff % 2 == 0:
        return 0 if z != w else 0
    p = kl_recursive(z, w, bound=bound, cache=cache)
    e = (ldiff - 1) // 2
    return p[e] if e < len(p) else 0


def classify_msp(x: Perm, w: Perm) -> FamilyParams:
    """
    The family parameters of a maximal singular point: flatten (x, w) to
    the moved positions and match the canonical family shapes.  Raises
    ``ValueError`` if x is not a maximal singular point of X_w.
    """
    if not bruhat_leq(x, w):
        raise ValueError("x is not <= w in Bruhat order")
    if x == w:
        raise ValueError("x equals w: not a singular point")
    if not all(raises_length_by_one(x, a, b) for a, b in reflection_set(x, w)):
        raise ValueError("not a maximal singular point: a Bruhat edge skips a level")
    params = family_params(*tilde_restrict(x, w))
    if params is None:
        raise ValueError("not a maximal singular point: no canonical family matches")
    return params


def kl_at_msp(x: Perm, w: Perm) -> KLPoly:
    """
    Closed-form P_{x,w} at a maximal singular point x of X_w.

    >>> format_poly(kl_at_msp((1, 4, 3, 2, 5), (4, 5, 3, 1, 2)))
    '1 + q^2'
    """
    params = classify_msp(x, w)
    if params.variant == "two_runs":
        return (1,) * min(params.k, params.m)
    if params.l == 2:
        return (1, 1)
    return (1,) + (0,) * (params.l - 2) + (1,)
