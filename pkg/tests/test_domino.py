import random

import pytest

from alca import Machine, domino_profile, domino_union, initial_prefixes, restrict, shift
from alca.behavior import is_time_invariant
from alca.fixtures import load

import oracles
from randmachines import random_machine


def W(*texts):
    return {tuple(t) for t in texts}


@pytest.fixture(scope="module")
def fig5():
    return load("fig5")


@pytest.mark.parametrize("t1, t2, expected", [
    (0, 1, W("aa", "ab", "ba")),
    (1, 3, W("aab", "aba", "baa")),
    (0, 2, W("aaa", "aab", "aba", "baa")),
    (5, 4, {()}),
])
def test_restrict_fig5(fig5, t1, t2, expected):
    assert set(restrict(fig5, t1, t2)) == expected


def test_domino_profile_l2(fig5):
    p = domino_profile(fig5, 2)
    assert [set(s) for s in p.prefix_sets] == [W("aaa", "aab", "aba", "baa")]
    assert (p.start, p.period) == (1, 1)
    assert [set(s) for s in p.cycle_sets] == [W("aab", "aba", "baa")]


def test_domino_profile_l1_is_constant(fig5):
    p = domino_profile(fig5, 1)
    assert p.prefix_sets == () and p.period == 1
    assert set(p.cycle_sets[0]) == W("aa", "ab", "ba")


def test_domino_profile_empty_machine():
    p = domino_profile(Machine.empty(["a"]), 2)
    assert p.prefix_sets == () and p.period == 1 and set(p.cycle_sets[0]) == set()


@pytest.mark.parametrize("l, expected", [
    (3, W("aaab", "aaba", "abaa", "baab")),
    (2, W("aaa", "aab", "aba", "baa")),
    (1, W("aa", "ab", "ba")),
])
def test_domino_union_fig5(fig5, l, expected):
    assert set(domino_union(fig5, l)) == expected


def test_initial_prefixes(fig5):
    assert [set(s) for s in initial_prefixes(fig5, 2)] == [{()}, W("a", "b")]
    assert [set(s) for s in initial_prefixes(fig5, 3)] == [{()}, W("a", "b"), W("aa", "ab", "ba")]
    assert initial_prefixes(fig5, 0) == []


def test_restrict_matches_brute_force():
    rng = random.Random(21)
    for _ in range(40):
        m = random_machine(rng, max_states=5)
        for t1 in range(4):
            for t2 in range(t1 - 1, t1 + 3):
                assert set(restrict(m, t1, t2)) == oracles.restrict(m, t1, t2)


def test_domino_union_matches_brute_force():
    rng = random.Random(22)
    for _ in range(40):
        m = random_machine(rng, max_states=6)
        for l in range(3):
            assert set(domino_union(m, l)) == oracles.domino_union(m, l)


def test_window_properties():
    rng = random.Random(23)
    for _ in range(40):
        m = random_machine(rng)
        sm = shift(m)
        time_inv = is_time_invariant(m).holds
        for l in range(1, 4):
            union = set(domino_union(m, l))
            if time_inv:
                assert union == set(restrict(m, 0, l))
            for t in range(6):
                wide = set(restrict(m, t, t + l))
                narrow = set(restrict(m, t, t + l - 1))
                assert {w[:-1] for w in wide} == narrow
                assert wide <= union
                assert set(restrict(sm, t, t + l)) == set(restrict(m, t + 1, t + l + 1))


def test_profile_agrees_with_restrict():
    rng = random.Random(24)
    for _ in range(30):
        m = random_machine(rng)
        for l in range(3):
            p = domino_profile(m, l)
            for t in range(p.start + 2 * p.period + 3):
                assert p.at(t) == restrict(m, t, t + l)
