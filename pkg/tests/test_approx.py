import random

import pytest

from alca import (
    Machine,
    TimeSet,
    equivalent,
    includes,
    is_strictly_time_invariant,
    lasso_member,
    state_space,
    strongest_async,
    strongest_sync,
)
from alca.fixtures import load
from alca.io import serialize_machine

import oracles
from randmachines import random_lasso, random_machine, random_member, strongly_connected_fsm


def W(*texts):
    return {tuple(t) for t in texts}


@pytest.fixture(scope="module")
def fig5():
    return load("fig5")


@pytest.mark.parametrize("l, expected", [
    (0, {()}),
    (1, W("", "a", "b")),
    (2, W("", "a", "b", "aa", "ab", "ba")),
    (3, W("", "a", "b", "aa", "ab", "ba", "aaa", "aab", "aba", "baa")),
])
def test_state_space_fig5(fig5, l, expected):
    assert state_space(fig5, l) == expected


def edges(m):
    return {(tr.src, tr.symbol, tr.dst): tr.guard for tr in m.transitions}


def test_sync_l1_is_all_times(fig5):
    q1 = strongest_sync(fig5, 1)
    assert q1.is_fsm
    assert set(q1.states) == {"λ", "a", "b"}
    assert set(edges(q1)) == {("λ", "a", "a"), ("λ", "b", "b"), ("a", "a", "a"),
                              ("a", "b", "b"), ("b", "a", "a")}
    assert serialize_machine(q1) == serialize_machine(load("q1"))


def test_sync_l2_has_startup_only_aa_loop(fig5):
    q2 = strongest_sync(fig5, 2)
    assert len(q2.states) == 6
    # three a's in a row only fit the window [0, 2]: the loop fires at t = 2
    assert edges(q2)[("aa", "a", "aa")] == TimeSet.singleton(2)
    assert serialize_machine(q2) == serialize_machine(load("q2"))


def test_async_matches_reference_machines(fig5):
    assert serialize_machine(strongest_async(fig5, 1)) == serialize_machine(load("fig6_left"))
    right = strongest_async(fig5, 2)
    assert serialize_machine(right) == serialize_machine(load("fig6_right"))
    assert edges(right)[("aa", "a", "aa")].is_all
    assert serialize_machine(strongest_async(fig5, 3)) == serialize_machine(fig5)


def test_empty_behavior_gives_empty_machine():
    e = Machine.empty(["a", "b"])
    for l in range(3):
        assert strongest_sync(e, l) == e
        assert strongest_async(e, l) == e


def test_l0_approximations(fig5):
    s0, a0 = strongest_sync(fig5, 0), strongest_async(fig5, 0)
    assert s0.states == ("λ",) == a0.states
    assert {tr.symbol for tr in a0.transitions} == {"a", "b"}


def test_soundness_against_definition():
    rng = random.Random(31)
    for _ in range(25):
        m = random_machine(rng, max_states=5)
        for l in range(3):
            s, a = strongest_sync(m, l), strongest_async(m, l)
            for _ in range(4):
                w = random_member(rng, m)
                assert lasso_member(s, w) and lasso_member(a, w)
            for _ in range(4):
                w = random_member(rng, a)
                assert lasso_member(s, w) == oracles.in_sync_approx(m, w, l)
                assert oracles.in_async_approx(m, w, l)
                w = random_member(rng, s)
                assert oracles.in_sync_approx(m, w, l)


def test_ordering_and_monotonicity():
    rng = random.Random(32)
    for _ in range(25):
        m = random_machine(rng, max_states=6)
        prev_s = prev_a = None
        for l in range(4):
            s, a = strongest_sync(m, l), strongest_async(m, l)
            assert includes(s, m) and includes(a, s)
            if prev_s is not None:
                assert includes(prev_s, s) and includes(prev_a, a)
            prev_s, prev_a = s, a


def test_idempotence():
    rng = random.Random(33)
    for _ in range(20):
        m = random_machine(rng, max_states=6)
        for l in range(3):
            a = strongest_async(m, l)
            assert equivalent(a, strongest_async(a, l))
            s = strongest_sync(m, l)
            assert equivalent(s, strongest_sync(s, l))


def test_state_names_are_recent_windows():
    rng = random.Random(34)
    for _ in range(20):
        m = random_machine(rng, max_states=5)
        for l in range(4):
            for q in (strongest_sync(m, l), strongest_async(m, l)):
                w = random_member(rng, q)
                states = {"λ"}
                for t in range(10):
                    expected = "".join(w.take(t)[max(0, t - l):t]) or "λ"
                    assert states == {expected}
                    states = {d for x in states for s, d in q.edges(x, t) if s == w.symbol(t)}


def test_sync_equals_async_for_strictly_time_invariant():
    rng = random.Random(35)
    checked = 0
    while checked < 15:
        m = strongly_connected_fsm(rng)
        if not is_strictly_time_invariant(m):
            continue
        checked += 1
        for l in range(4):
            assert equivalent(strongest_sync(m, l), strongest_async(m, l))


def test_membership_matches_window_definitions():
    rng = random.Random(36)
    for _ in range(30):
        m = random_machine(rng, max_states=5, max_symbols=2)
        for l in range(3):
            s, a = strongest_sync(m, l), strongest_async(m, l)
            probes = [random_lasso(rng, m.alphabet) for _ in range(6)]
            probes += [random_member(rng, q) for q in (m, s, a)]
            for w in probes:
                assert lasso_member(s, w) == oracles.in_sync_approx(m, w, l), (l, w)
                assert lasso_member(a, w) == oracles.in_async_approx(m, w, l), (l, w)


def test_async_is_fsm_for_time_invariant_behaviors():
    rng = random.Random(37)
    for _ in range(20):
        m = strongly_connected_fsm(rng)
        for l in range(4):
            assert strongest_async(m, l).is_fsm
