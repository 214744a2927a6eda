"""Brute-force smoothness, maximal singular loci, and the pattern-pair set."""

import random

import pytest

from schubsing.perm import all_perms, apply_transposition, identity, length
from schubsing.bruhat import bruhat_leq, covers_down, raises_length_by_one, reflection_set
from schubsing.oracle import (
    ew_maximal,
    is_msp,
    is_msp_by_family,
    is_smooth_point,
    is_smooth_variety,
    maxsing_bruteforce,
    singular_points,
)
from schubsing.maxsing_fast import maxsing


def test_is_smooth_point_examples():
    rep = is_smooth_point(identity(4), (3, 4, 1, 2))
    assert (rep.r_count, rep.codim, rep.smooth) == (5, 4, False)

    w = (4, 2, 3, 1)
    rep = is_smooth_point(w, w)
    assert rep.smooth and rep.r_count == 0 and rep.codim == 0

    x = (2, 1, 4, 3)
    rep = is_smooth_point(x, w)
    assert not rep.smooth and rep.r_count == 4  # k * m at the two-run shape
    for y in {apply_transposition(x, a, b) for a, b in reflection_set(x, w)}:
        assert is_smooth_point(y, w).smooth

    with pytest.raises(ValueError):
        is_smooth_point((2, 1), (1, 2))


def test_is_smooth_variety():
    assert not is_smooth_variety((3, 4, 1, 2))
    assert is_smooth_variety((1, 2, 3, 4))
    assert not is_smooth_variety((4, 2, 3, 1))


def test_maxsing_bruteforce_examples():
    assert maxsing_bruteforce((3, 4, 1, 2)) == {(1, 3, 2, 4)}
    assert maxsing_bruteforce((2, 1, 4, 3)) == frozenset()
    with pytest.raises(ValueError):
        maxsing_bruteforce(tuple(range(1, 10)))


def test_maxsing_bruteforce_worked_example_n8():
    got = maxsing_bruteforce((6, 8, 4, 7, 5, 3, 1, 2))
    assert got == {
        (4, 8, 3, 7, 6, 5, 1, 2),
        (6, 4, 3, 8, 7, 5, 1, 2),
        (4, 6, 5, 8, 7, 3, 1, 2),
        (6, 8, 1, 7, 4, 3, 2, 5),
    }


def test_is_msp_examples():
    w = (4, 2, 3, 1)
    assert is_msp((2, 1, 4, 3), w)
    assert not is_msp(w, w)
    assert not is_msp(identity(4), w)


def test_is_msp_by_family_examples():
    assert is_msp_by_family((1, 3, 2, 4), (3, 4, 1, 2))
    assert is_msp_by_family((1, 4, 3, 2, 5), (4, 5, 3, 1, 2))
    assert not is_msp_by_family(identity(4), (4, 2, 3, 1))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_is_msp_equals_family_characterization(n):
    from schubsing.bruhat import interval_below

    for w in all_perms(n):
        for x in interval_below(w):
            assert is_msp(x, w) == is_msp_by_family(x, w), (x, w)


def test_ew_maximal_examples():
    assert ew_maximal((3, 4, 1, 2)) == {(1, 3, 2, 4)}
    assert ew_maximal((2, 3, 1, 4)) == frozenset()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ew_equals_bruteforce(n):
    for w in all_perms(n):
        assert ew_maximal(w) == maxsing_bruteforce(w)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_smoothness_criteria_agree(n):
    for w in all_perms(n):
        pattern_smooth = is_smooth_variety(w)
        assert pattern_smooth == (not maxsing_bruteforce(w))
        assert pattern_smooth == is_smooth_point(identity(n), w).smooth


@pytest.mark.parametrize("n", [3, 4, 5])
def test_msps_are_maximal_and_cover_smooth(n):
    for w in all_perms(n):
        for x in maxsing_bruteforce(w):
            for y in {apply_transposition(x, a, b) for a, b in reflection_set(x, w)}:
                assert is_smooth_point(y, w).smooth


@pytest.mark.parametrize("n", [3, 4, 5])
def test_msp_edges_raise_length_by_one(n):
    for w in all_perms(n):
        for x in maxsing_bruteforce(w):
            assert all(raises_length_by_one(x, a, b) for a, b in reflection_set(x, w))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_msp_inherits_descents(n):
    # sw < w forces sx < x, and ws < w forces xs < x, at every MSP x of w
    for w in all_perms(n):
        for x in maxsing_bruteforce(w):
            for i in range(1, n):
                if w.index(i) > w.index(i + 1):  # s_i w < w
                    assert x.index(i) > x.index(i + 1)
                if w[i - 1] > w[i]:  # w s_i < w
                    assert x[i - 1] > x[i]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enone_msp_iff_every_short_edge_has_extras(n):
    from schubsing.bruhat import extra_set, interval_below

    for w in all_perms(n):
        for x in interval_below(w):
            if x == w:
                continue
            r_x = reflection_set(x, w)
            short = [t for t in r_x if raises_length_by_one(x, *t)]
            all_extra = all(extra_set(x, w, t) for t in short)
            assert is_msp(x, w) == all_extra, (x, w)


def test_singular_points_match_smoothness():
    rng = random.Random(6)
    from schubsing.bruhat import interval_below

    for _ in range(10):
        w = tuple(rng.sample(range(1, 7), 6))
        sing = singular_points(w)
        for x in interval_below(w):
            assert (x in sing) == (not is_smooth_point(x, w).smooth)
