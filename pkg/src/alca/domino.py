"""Restriction sets and domino profiles of machine behaviors.

``restrict(m, t1, t2)`` is the set of length ``t2 - t1 + 1`` windows that
full behavior words show on ``[t1, t2]``. Windows only depend on the pair
(reachable set at ``t1``, phase of ``t1``), which is eventually periodic, so
the whole family ``t -> restrict(m, t, t + l)`` has a finite description.
"""

from dataclasses import dataclass

from .machine import word_key, word_text
from .timeset import minimize_cycle


@dataclass(frozen=True)
class WordSet:
    length: int
    words: frozenset

    def __post_init__(self):
        for w in self.words:
            if len(w) != self.length:
                raise ValueError(f"word {w!r} does not have length {self.length}")

    def __contains__(self, word):
        return tuple(word) in self.words

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def sorted(self, alphabet):
        return sorted(self.words, key=lambda w: word_key(w, alphabet))

    def texts(self, alphabet):
        return [word_text(w, alphabet) or "λ" for w in self.sorted(alphabet)]


@dataclass(frozen=True)
class DominoProfile:
    l: int
    prefix_sets: tuple
    start: int
    period: int
    cycle_sets: tuple

    def at(self, t):
        if t < self.start:
            return self.prefix_sets[t]
        return self.cycle_sets[(t - self.start) % self.period]

    def all_sets(self):
        return self.prefix_sets + self.cycle_sets


def _windows(m, states, t, length):
    """Words of ``length`` readable from live ``states`` at time ``t``, ending live."""
    out = set()
    stack = [((), frozenset(states), t)]
    while stack:
        word, current, s = stack.pop()
        if not current:
            continue
        if len(word) == length:
            out.add(word)
            continue
        for sym in m.alphabet:
            stack.append((word + (sym,), m.live_step(current, s, sym), s + 1))
    return frozenset(out)


def restrict(m, t1, t2):
    """The restriction set ``B|[t1, t2]``; ``{λ}`` for an empty interval."""
    if t2 < t1:
        return WordSet(0, frozenset({()}))
    key = ("restrict", t1, t2)
    if key not in m._memo:
        m._memo[key] = WordSet(t2 - t1 + 1, _windows(m, m.live_at(t1), t1, t2 - t1 + 1))
    return m._memo[key]


def domino_profile(m, l):
    """Eventually periodic description of ``t -> restrict(m, t, t + l)``."""
    key = ("profile", l)
    if key in m._memo:
        return m._memo[key]
    sets, start, period = m.reach_cycle
    values = [restrict(m, t, t + l) for t in range(start + period)]
    start, period = minimize_cycle(values, start, period)
    profile = m._memo[key] = DominoProfile(l, tuple(values[:start]), start, period,
                                           tuple(values[start:start + period]))
    return profile


def domino_union(m, l):
    """All windows of length ``l + 1`` at any time."""
    words = set()
    for ws in domino_profile(m, l).all_sets():
        words.update(ws.words)
    return WordSet(l + 1, frozenset(words))


def initial_prefixes(m, l):
    """``[B|[0,-1], B|[0,0], ..., B|[0,l-2]]``."""
    return [restrict(m, 0, r - 1) for r in range(l)]
