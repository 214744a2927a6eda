"""The phi map between reflection sets, its injectivity, and incompatible edges."""

import random

import pytest

from schubsing.perm import all_perms, apply_simple, apply_transposition, length
from schubsing.bruhat import (
    delta_positions,
    extra_set,
    interval_below,
    phi_map,
    reflection_set,
)
from .conftest import random_below, random_descent_reflection, random_perm


def test_phi_worked_examples():
    w = (2, 4, 5, 3, 1)
    x0 = (2, 1, 5, 4, 3)
    assert phi_map(x0, w, (1, 2), (2, 4)) == (2, 4)
    assert phi_map(x0, w, (1, 2), (2, 5)) == (2, 5)
    x1 = (1, 2, 5, 4, 3)
    assert phi_map(x1, w, (4, 5), (1, 2)) == (1, 2)  # commuting
    assert phi_map(x1, w, (4, 5), (2, 4)) == (2, 5)
    assert phi_map(x1, w, (4, 5), (2, 5)) == (2, 4)
    x2 = (1, 2, 5, 3, 4)
    assert phi_map(x2, w, (3, 4), (1, 2)) == (1, 2)  # commuting
    assert phi_map(x2, w, (3, 4), (2, 4)) == (2, 3)
    assert phi_map(x2, w, (3, 4), (2, 5)) == (2, 5)  # commuting
    assert phi_map(x2, w, (3, 4), (4, 5)) == (3, 5)


def test_phi_precondition_errors():
    w = (2, 4, 5, 3, 1)
    with pytest.raises(ValueError):
        phi_map((1, 2, 5, 4, 3), w, (1, 2), (2, 4))  # yt > y
    with pytest.raises(ValueError):
        phi_map((2, 1, 5, 4, 3), w, (1, 2), (1, 3))  # tp not in R(y, w)
    with pytest.raises(ValueError):
        phi_map((2, 1, 5, 4, 3), w, (1, 2), (1, 2))  # t equals tp


def _phi_triples(n):
    for w in all_perms(n):
        iv = interval_below(w)
        for y in iv:
            ly = length(y)
            for a in range(1, n):
                for b in range(a + 1, n + 1):
                    if y[a - 1] > y[b - 1]:
                        yield w, y, (a, b), ly


@pytest.mark.parametrize("n", [3, 4])
def test_phi_injects_into_target_exhaustive(n):
    for w, y, t, _ in _phi_triples(n):
        r_y = reflection_set(y, w)
        yt = apply_transposition(y, *t)
        r_yt = reflection_set(yt, w)
        image = [phi_map(y, w, t, tp) for tp in r_y]
        assert len(set(image)) == len(r_y)
        assert set(image) <= r_yt - {t}


def test_phi_injects_into_target_random():
    rng = random.Random(17)
    checked = 0
    while checked < 200:
        n = rng.randrange(4, 8)
        w = random_perm(rng, n)
        y = random_below(rng, w)
        t = random_descent_reflection(rng, y)
        if t is None:
            continue
        checked += 1
        r_y = reflection_set(y, w)
        r_yt = reflection_set(apply_transposition(y, *t), w)
        image = [phi_map(y, w, t, tp) for tp in r_y]
        assert len(set(image)) == len(r_y)
        assert set(image) <= r_yt - {t}


def test_delta_monotone_along_edges():
    rng = random.Random(29)
    checked = 0
    while checked < 150:
        n = rng.randrange(3, 8)
        w = random_perm(rng, n)
        y = random_below(rng, w)
        t = random_descent_reflection(rng, y)
        if t is None:
            continue
        checked += 1
        yt = apply_transposition(y, *t)
        assert set(delta_positions(y, w)) <= set(delta_positions(yt, w))


@pytest.mark.parametrize("n", [3, 4])
def test_phi_simple_reflection_decomposition(n):
    # ws_i < w and ys_i < y <= w give R(ys_i, w) = phi_{s_i}(R(y, w)) | {s_i}
    for w in all_perms(n):
        iv = interval_below(w)
        for i in range(1, n):
            if w[i - 1] < w[i]:
                continue
            for y in iv:
                if y[i - 1] < y[i]:
                    continue
                t = (i, i + 1)
                image = {phi_map(y, w, t, tp) for tp in reflection_set(y, w)}
                assert reflection_set(apply_simple(y, i), w) == image | {t}


def test_reciprocity():
    # for t, tp in R(x, w) both raising length by one, membership of tp in
    # the image of phi_t matches membership of t in the image of phi_tp
    rng = random.Random(41)
    checked = 0
    while checked < 120:
        n = rng.randrange(3, 7)
        w = random_perm(rng, n)
        x = random_below(rng, w)
        r_x = sorted(reflection_set(x, w))
        cands = [
            t
            for t in r_x
            if length(apply_transposition(x, *t)) == length(x) + 1
        ]
        if len(cands) < 2:
            continue
        t, tp = rng.sample(cands, 2)
        checked += 1
        xt = apply_transposition(x, *t)
        xtp = apply_transposition(x, *tp)
        in_im_t = any(phi_map(xt, w, t, s) == tp for s in reflection_set(xt, w))
        in_im_tp = any(phi_map(xtp, w, tp, s) == t for s in reflection_set(xtp, w))
        assert in_im_t == in_im_tp


def test_reciprocity_needs_short_edges():
    # counterexample with l(xt') > l(x) + 1
    x, w = (1, 2, 3), (3, 2, 1)
    t, tp = (1, 2), (1, 3)
    xt = apply_transposition(x, *t)
    xtp = apply_transposition(x, *tp)
    in_im_t = any(phi_map(xt, w, t, s) == tp for s in reflection_set(xt, w))
    in_im_tp = any(phi_map(xtp, w, tp, s) == t for s in reflection_set(xtp, w))
    assert in_im_t and not in_im_tp


def test_extra_set_examples():
    assert extra_set((1, 2, 3), (3, 2, 1), (1, 3)) == {(1, 2), (2, 3)}
    assert extra_set((1, 2, 3, 4), (4, 2, 3, 1), (1, 2)) == frozenset()
    x, w = (2, 1, 4, 3), (4, 2, 3, 1)
    r_x = reflection_set(x, w)
    assert r_x == {(1, 3), (1, 4), (2, 3), (2, 4)}
    for t in r_x:
        assert extra_set(x, w, t)
    with pytest.raises(ValueError):
        extra_set(x, w, (1, 2))
