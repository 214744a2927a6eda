"""The polynomial-time component enumeration and the pattern-count rule."""

import random

import pytest

from schubsing.perm import all_perms, length
from schubsing.bruhat import bruhat_leq, raises_length_by_one, reflection_set, tilde_restrict
from schubsing.maxsing_fast import (
    Component,
    FamilyParams,
    canonical_family,
    enumerate_components,
    family_params,
    maxsing,
    useful_pattern_count,
    verify_component,
)
from schubsing.oracle import is_msp_by_family, maxsing_bruteforce
from .conftest import random_perm

N8_EXAMPLE = (6, 8, 4, 7, 5, 3, 1, 2)
N8_COMPONENTS = {
    (4, 8, 3, 7, 6, 5, 1, 2),
    (6, 4, 3, 8, 7, 5, 1, 2),
    (4, 6, 5, 8, 7, 3, 1, 2),
    (6, 8, 1, 7, 4, 3, 2, 5),
}


def test_canonical_family():
    assert canonical_family(FamilyParams("two_runs", 2, 2)) == (
        (2, 1, 4, 3),
        (4, 2, 3, 1),
    )
    assert canonical_family(FamilyParams("three_runs", 1, 1, l=2)) == (
        (1, 3, 2, 4),
        (3, 4, 1, 2),
    )
    assert canonical_family(FamilyParams("three_runs", 1, 1, l=3)) == (
        (1, 4, 3, 2, 5),
        (4, 5, 3, 1, 2),
    )
    with pytest.raises(ValueError):
        canonical_family(FamilyParams("two_runs", 1, 3))
    with pytest.raises(ValueError):
        canonical_family(FamilyParams("three_runs", 2, 1, l=3))


def test_family_params_round_trip():
    shapes = [
        FamilyParams("two_runs", k, m) for k in (2, 3, 4) for m in (2, 3, 4)
    ] + [
        FamilyParams("three_runs", 1, 1, l=l) for l in (2, 3, 4, 5)
    ] + [
        FamilyParams("three_runs", k, m, l=2) for k in (1, 2, 3) for m in (1, 2, 3)
    ]
    for params in shapes:
        assert family_params(*canonical_family(params)) == params
    assert family_params((1, 2, 3, 4), (4, 3, 2, 1)) is None


def test_enumerate_components_worked_example():
    comps = enumerate_components(N8_EXAMPLE)
    assert {c.x for c in comps} == N8_COMPONENTS
    assert [c.x for c in comps] == sorted(c.x for c in comps)
    for c in comps:
        assert verify_component(N8_EXAMPLE, c)


def test_enumerate_components_smooth_is_empty():
    assert enumerate_components((2, 3, 1, 4)) == []
    assert enumerate_components((1, 2, 3)) == []


def test_enumerate_components_n17_count():
    w = (17, 6, 2, 15, 12, 11, 3, 8, 16, 7, 14, 5, 13, 9, 10, 1, 4)
    assert len(enumerate_components(w)) == 29


def test_maxsing_examples():
    assert maxsing((3, 4, 1, 2)) == {(1, 3, 2, 4)}
    assert maxsing((7, 4, 3, 2, 6, 5, 1)) == {(4, 3, 2, 1, 7, 6, 5)}
    assert len(maxsing((4, 5, 6, 1, 2, 3))) == 9


def test_verify_component():
    w = (4, 2, 3, 1)
    x = (2, 1, 4, 3)
    good = Component("4231", (1, 3), (2, 4), x)
    assert verify_component(w, good)

    # same frame inside [5,2,3,4,1] hits the entry 3 in a forbidden region
    w5 = (5, 2, 3, 4, 1)
    from schubsing.perm import apply_cycle

    bad = Component("4231", (1, 4), (2, 5), apply_cycle(w5, (1, 4, 5, 2)))
    assert not verify_component(w5, bad)

    wrong_x = Component("4231", (1, 3), (2, 4), (1, 2, 4, 3))
    assert not verify_component(w, wrong_x)
    assert not verify_component(w, Component("bogus", (1, 3), (2, 4), x))
    assert not verify_component(w, Component("4231", (1, 3), (3, 4), x))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_oracle_equivalence_small(n):
    for w in all_perms(n):
        assert maxsing(w) == maxsing_bruteforce(w), w


@pytest.mark.parametrize("n", [4, 5])
def test_pattern_count_matches_components_small(n):
    for w in all_perms(n):
        assert useful_pattern_count(w) == len(maxsing(w)), w


def test_useful_pattern_count_examples():
    assert useful_pattern_count((7, 4, 3, 2, 6, 5, 1)) == 1
    assert useful_pattern_count((1, 2, 3, 4)) == 0
    # the 5241 occurrence inside 52341 is discarded, two occurrences remain
    assert useful_pattern_count((5, 2, 3, 4, 1)) == 2


def test_components_are_family_msps():
    rng = random.Random(14)
    for _ in range(25):
        n = rng.randrange(4, 9)
        w = random_perm(rng, n)
        for c in enumerate_components(w):
            assert bruhat_leq(c.x, w)
            assert is_msp_by_family(c.x, w)
            for t in reflection_set(c.x, w):
                assert raises_length_by_one(c.x, *t)
            params = family_params(*tilde_restrict(c.x, w))
            assert params is not None
            if c.case == "4231":
                assert params.variant == "two_runs"
            else:
                assert params.variant == "three_runs"


def test_family_codimension_deficit_is_negative():
    # two-run (k, m): l(w) - l(x) = k + m - 1 and #R = k m
    for k in (2, 3, 4):
        for m in (2, 3, 4):
            x, w = canonical_family(FamilyParams("two_runs", k, m))
            codim = length(w) - length(x)
            assert codim == k + m - 1
            assert len(reflection_set(x, w)) == k * m
            assert codim - k * m == k + m - k * m - 1 < 0
    # three-run (k, l, m): l(w) - l(x) = k + m + 2(l - 2) + 1 and #R = l(k + m)
    for params in (
        FamilyParams("three_runs", 1, 1, l=2),
        FamilyParams("three_runs", 2, 1, l=2),
        FamilyParams("three_runs", 2, 3, l=2),
        FamilyParams("three_runs", 1, 1, l=4),
    ):
        k, l, m = params.k, params.l, params.m
        x, w = canonical_family(params)
        codim = length(w) - length(x)
        assert codim == k + m + 2 * (l - 2) + 1
        assert len(reflection_set(x, w)) == l * (k + m)
        assert codim < l * (k + m)


def test_no_comparable_pair_in_output():
    rng = random.Random(23)
    cases = [tuple(random_perm(rng, rng.randrange(4, 9))) for _ in range(20)]
    cases += [w for w in all_perms(5)]
    for w in cases:
        ms = sorted(maxsing(w))
        for i, x in enumerate(ms):
            for y in ms[i + 1 :]:
                assert not bruhat_leq(x, y) and not bruhat_leq(y, x)


def test_dedup_keeps_single_witness_per_x():
    comps = enumerate_components(N8_EXAMPLE)
    assert len({c.x for c in comps}) == len(comps)
