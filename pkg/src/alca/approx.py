"""Strongest synchronous and asynchronous l-complete approximations.

Both constructions use the sliding-window state space: during the first
``l`` steps a state is the word read so far, afterwards it is the last ``l``
symbols. They differ only in which windows may be appended once the
window is full: the synchronous machine consults the windows allowed at the
current time (so its guards are time sets), the asynchronous one accepts any
window that occurs at some time (so it is a plain FSM).
"""

from .domino import domino_profile, domino_union, initial_prefixes, restrict
from .machine import Machine, is_empty, trim, word_key, word_name
from .timeset import TimeSet


def state_space(m, l):
    """Startup words of length < l plus every length-l window."""
    if l == 0:
        return {()}
    words = set()
    for ws in initial_prefixes(m, l):
        words.update(ws.words)
    words.update(domino_union(m, l - 1).words)
    return words


def _next_state(xi, sym, l):
    return (xi + (sym,))[1:] if l else ()


def _startup_transitions(m, l, guard_for):
    out = []
    for r in range(l):
        here = restrict(m, 0, r - 1)
        ahead = restrict(m, 0, r)
        for xi in here:
            for sym in m.alphabet:
                if xi + (sym,) in ahead:
                    out.append((xi, sym, xi + (sym,), guard_for(r)))
    return out


def _full_windows(m, l):
    if l == 0:
        return [()]
    return [w for w in domino_union(m, l - 1) if len(w) == l]


def _build(m, l, transitions):
    names = {}

    def name(word):
        if word not in names:
            names[word] = word_name(word, m.alphabet)
        return names[word]

    states = sorted(state_space(m, l), key=lambda w: word_key(w, m.alphabet))
    raw = Machine.create(
        m.alphabet,
        [name(w) for w in states],
        [name(())],
        [(name(a), s, name(b), g) for a, s, b, g in transitions],
    )
    return trim(raw)


def strongest_sync(m, l):
    """tFSM realizing the strongest synchronous l-complete approximation.

    Startup transitions fire only at the time equal to the length of their
    source word; a full-window transition ``xi -> xi[1:] + sym`` fires at
    every ``t >= l`` with ``xi + sym`` among the windows on ``[t - l, t]``.
    """
    if is_empty(m):
        return Machine.empty(m.alphabet)
    transitions = _startup_transitions(m, l, TimeSet.singleton)
    profile = domino_profile(m, l)
    size = profile.start + profile.period
    for xi in _full_windows(m, l):
        for sym in m.alphabet:
            window = xi + (sym,)
            flags = [window in profile.at(s) for s in range(size)]
            when = TimeSet.from_pattern(flags, profile.start, profile.period).shift_up(l)
            if not when.is_empty:
                transitions.append((xi, sym, _next_state(xi, sym, l), when))
    return _build(m, l, transitions)


def strongest_async(m, l):
    """FSM realizing the strongest asynchronous l-complete approximation.

    The window read at time ``l`` must also be a valid opening window, which
    the sliding-window state alone cannot tell apart from later windows. A
    window that occurs at some time but never at the start therefore gets
    the guard "any time except l". Time invariant behaviors never need it,
    so for them the result is a plain FSM.
    """
    if is_empty(m):
        return Machine.empty(m.alphabet)
    everywhere = TimeSet.all()
    not_first = TimeSet.singleton(l).complement()
    transitions = _startup_transitions(m, l, lambda r: everywhere)
    dominoes = domino_union(m, l)
    opening = restrict(m, 0, l)
    for xi in _full_windows(m, l):
        for sym in m.alphabet:
            window = xi + (sym,)
            if window in dominoes:
                guard = everywhere if window in opening else not_first
                transitions.append((xi, sym, _next_state(xi, sym, l), guard))
    return _build(m, l, transitions)
