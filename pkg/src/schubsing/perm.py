"""
Permutations of {1, ..., n} in one-line notation.

A permutation ``w`` is stored as a tuple of length ``n`` with
``w[i - 1] == w(i)``.  Positions and values are 1-based everywhere in the
public API, matching the usual combinatorics conventions; the shift to
0-based tuple indexing happens only at the storage boundary.

Transpositions are pairs ``(a, b)`` of positions with ``a < b``; acting on
the right, ``w * t`` swaps the entries in positions ``a`` and ``b``.
Index sets (for flattening and pattern occurrences) are strictly increasing
tuples of positions.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
Transposition = tuple[int, int]
IndexSet = tuple[int, ...]


def is_permutation(seq: Sequence[int]) -> bool:
    """
    Check that ``seq`` is a bijection of {1, ..., n}.

    >>> is_permutation((2, 1, 3)), is_permutation((2, 2, 1)), is_permutation(())
    (True, False, False)
    """
    n = len(seq)
    if n == 0:
        return False
    return sorted(seq) == list(range(1, n + 1))


def as_perm(seq: Iterable[int]) -> Perm:
    """Normalize to a tuple, raising ``ValueError`` if not a permutation."""
    w = tuple(seq)
    if not is_permutation(w):
        raise ValueError(f"not a permutation of 1..n: {list(w)}")
    return w


def identity(n: int) -> Perm:
    """
    The identity permutation of {1, ..., n}.

    >>> identity(3)
    (1, 2, 3)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(range(1, n + 1))


def compose(u: Perm, v: Perm) -> Perm:
    """
    Composition ``(u o v)(i) = u(v(i))``.

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(u) != len(v):
        raise ValueError("size mismatch")
    return tuple(u[j - 1] for j in v)


def inverse(w: Perm) -> Perm:
    """
    The inverse permutation.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def length(w: Perm) -> int:
    """
    Coxeter length: the number of inversions ``#{i < j : w(i) > w(j)}``.

    >>> length((3, 4, 1, 2))
    4
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def right_descents(w: Perm) -> list[int]:
    """Positions ``i`` with ``w(i) > w(i+1)``, i.e. right descents ``s_i``."""
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


def apply_transposition(w: Perm, a: int, b: int) -> Perm:
    """
    Right action of the transposition ``t_{a,b}``: swap positions a and b.

    >>> apply_transposition((2, 4, 5, 3, 1), 1, 2)
    (4, 2, 5, 3, 1)
    """
    n = len(w)
    if not (1 <= a < b <= n):
        raise ValueError(f"transposition ({a},{b}) out of range for n={n}")
    x = list(w)
    x[a - 1], x[b - 1] = x[b - 1], x[a - 1]
    return tuple(x)


def apply_simple(w: Perm, i: int) -> Perm:
    """Right action of the adjacent transposition ``s_i = t_{i,i+1}``."""
    return apply_transposition(w, i, i + 1)


def apply_cycle(w: Perm, cycle: Sequence[int]) -> Perm:
    """
    Right action of the cycle ``(c_1, ..., c_r)`` on positions.

    The convention is pinned so that the entry of ``w`` at position ``c_j``
    moves to position ``c_{j+1}`` (indices cyclic): the result ``x``
    satisfies ``x(c_{j+1}) = w(c_j)``.  A 2-cycle coincides with
    ``apply_transposition``.

    >>> apply_cycle((4, 2, 3, 1), (1, 3, 4, 2))
    (2, 1, 4, 3)
    """
    n = len(w)
    r = len(cycle)
    if len(set(cycle)) != r:
        raise ValueError("cycle has repeated positions")
    if any(not 1 <= c <= n for c in cycle):
        raise ValueError("cycle position out of range")
    x = list(w)
    for j in range(r):
        x[cycle[(j + 1) % r] - 1] = w[cycle[j] - 1]
    return tuple(x)


def flatten(x: Perm, zset: Sequence[int]) -> Perm:
    """
    The flattening ``fl_Z(x)``: the permutation of {1, ..., |Z|} in the same
    relative order as ``[x(z_1), ..., x(z_k)]`` for ``Z = {z_1 < ... < z_k}``.

    >>> flatten((5, 2, 4, 1, 6, 3), (3, 5, 6))
    (2, 3, 1)
    """
    z = _check_index_set(zset, len(x))
    vals = [x[p - 1] for p in z]
    order = sorted(vals)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in vals)


def unflatten(x: Perm, zset: Sequence[int], u: Perm) -> Perm:
    """
    The section ``unfl^x_Z(u)``: agrees with ``x`` off ``Z`` and flattens to
    ``u`` on ``Z``, reusing the values ``x`` takes on ``Z``.

    >>> unflatten((5, 2, 4, 1, 6, 3), (3, 5, 6), (3, 1, 2))
    (5, 2, 6, 1, 3, 4)
    """
    z = _check_index_set(zset, len(x))
    if len(z) != len(u):
        raise ValueError("size mismatch between Z and u")
    vals = sorted(x[p - 1] for p in z)
    out = list(x)
    for p, ui in zip(z, u):
        out[p - 1] = vals[ui - 1]
    return tuple(out)


def _check_index_set(zset: Sequence[int], n: int) -> IndexSet:
    z = tuple(zset)
    if not z:
        raise ValueError("empty index set")
    if any(not 1 <= p <= n for p in z):
        raise ValueError("index set out of bounds")
    if any(a >= b for a, b in zip(z, z[1:])):
        raise ValueError("index set must be strictly increasing")
    return z


def pattern_occurrences(w: Perm, p: Perm) -> list[IndexSet]:
    """
    All occurrences of the pattern ``p`` in ``w``: index sets
    ``i_1 < ... < i_k`` with ``fl(w(i_1), ..., w(i_k)) = p``, in
    lexicographic order.

    >>> pattern_occurrences((4, 2, 3, 1), (3, 4, 1, 2))
    []
    >>> pattern_occurrences((3, 4, 1, 2), (2, 1))
    [(1, 3), (1, 4), (2, 3), (2, 4)]
    """
    n, k = len(w), len(p)
    out: list[IndexSet] = []
    if k > n:
        return out
    chosen: list[int] = []

    def extend(start: int) -> None:
        j = len(chosen)
        if j == k:
            out.append(tuple(chosen))
            return
        for i in range(start, n - (k - j) + 2):
            # the new value must relate to each chosen value as p dictates
            ok = True
            for jj, cpos in enumerate(chosen):
                if (w[i - 1] > w[cpos - 1]) != (p[j] > p[jj]):
                    ok = False
                    break
            if ok:
                chosen.append(i)
                extend(i + 1)
                chosen.pop()

    extend(1)
    return out


def contains_pattern(w: Perm, p: Perm) -> bool:
    """Early-exit test for containment of the pattern ``p`` in ``w``."""
    n, k = len(w), len(p)
    if k > n:
        return False
    chosen: list[int] = []

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == k:
            return True
        for i in range(start, n - (k - j) + 2):
            ok = True
            for jj, cpos in enumerate(chosen):
                if (w[i - 1] > w[cpos - 1]) != (p[j] > p[jj]):
                    ok = False
                    break
            if ok:
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(1)


def avoids_pattern(w: Perm, p: Perm) -> bool:
    """True iff ``w`` contains no occurrence of the pattern ``p``."""
    return not contains_pattern(w, p)


_TOKEN_RE = re.compile(r"[,\s]+")


def parse_one_line(text: str) -> Perm:
    """
    Parse one-line notation: optional surrounding brackets, comma- or
    whitespace-separated positive integers.

    >>> parse_one_line("[6 8 4 7 5 3 1 2]")
    (6, 8, 4, 7, 5, 3, 1, 2)
    >>> parse_one_line("2,4,5,3,1")
    (2, 4, 5, 3, 1)
    """
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    if not s.strip():
        raise ValueError(f"empty permutation text: {text!r}")
    entries = []
    for tok in _TOKEN_RE.split(s.strip()):
        if not tok.isdigit():
            raise ValueError(f"bad token {tok!r} in permutation text {text!r}")
        entries.append(int(tok))
    return as_perm(entries)


def format_one_line(w: Perm) -> str:
    """
    Render in bracketed one-line notation; inverse of ``parse_one_line``.

    >>> format_one_line((2, 4, 5, 3, 1))
    '[2,4,5,3,1]'
    """
    return "[" + ",".join(str(v) for v in w) + "]"


def all_perms(n: int) -> Iterator[Perm]:
    """Iterate over all of S_n in lexicographic order."""
    from itertools import permutations

    return permutations(range(1, n + 1))
