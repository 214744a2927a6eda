"""Shared fixtures: exhaustive S_6 oracle data and random-pair helpers."""

from __future__ import annotations

import random
import time

import pytest

from schubsing.perm import all_perms, apply_transposition, length
from schubsing.bruhat import covers_down
from schubsing.maxsing_fast import maxsing
from schubsing.oracle import ew_maximal, maxsing_bruteforce


@pytest.fixture(scope="session")
def s6_triple():
    """
    (data, elapsed): for every w in S_6 the triple of maximal singular sets
    (brute force, fast enumeration, pattern-pair construction), plus the
    wall time the sweep took.
    """
    t0 = time.perf_counter()
    data = {}
    for w in all_perms(6):
        data[w] = (maxsing_bruteforce(w), maxsing(w), ew_maximal(w))
    return data, time.perf_counter() - t0


def random_perm(rng: random.Random, n: int):
    w = list(range(1, n + 1))
    rng.shuffle(w)
    return tuple(w)


def random_below(rng: random.Random, w, steps: int | None = None):
    """A random element <= w reached by a downward cover walk."""
    y = w
    budget = rng.randrange(length(w) + 1) if steps is None else steps
    for _ in range(budget):
        downs = covers_down(y)
        if not downs:
            break
        y = rng.choice(downs)
    return y


def random_descent_reflection(rng: random.Random, y):
    """A random t = (a, b) with yt < y, or None if y is the identity."""
    n = len(y)
    pairs = [(a, b) for a in range(1, n) for b in range(a + 1, n + 1) if y[a - 1] > y[b - 1]]
    return rng.choice(pairs) if pairs else None
