"""Finite state machines with eventually periodic time guards.

One representation covers both plain FSMs (every guard is the all-times
set) and time dependent machines. A run reads one symbol per time step
starting at time 0; a transition may fire at time ``t`` only if ``t`` is in
its guard. The behavior of a machine is the set of infinite words that admit
an infinite run from an initial state.

All time-dependent questions are answered on the finite graph of
``(state, phase)`` configurations, see :class:`alca.timeset.Clock`.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import SchemaError, SymbolError
from .timeset import Clock, TimeSet, minimize_cycle

LAMBDA = "λ"


# -- words -------------------------------------------------------------------

def _single_char(alphabet):
    return all(len(s) == 1 for s in alphabet)


def word_text(word, alphabet):
    """Render a word; symbols are concatenated when all are one character."""
    if not word:
        return ""
    sep = "" if _single_char(alphabet) else "."
    return sep.join(word)


def word_name(word, alphabet):
    """State name for a word, ``λ`` for the empty word."""
    return word_text(word, alphabet) or LAMBDA


def parse_word(text, alphabet):
    """Inverse of :func:`word_text`; raises :class:`SymbolError` on unknown symbols."""
    if text in ("", LAMBDA):
        return ()
    parts = tuple(text) if _single_char(alphabet) else tuple(text.split("."))
    bad = [p for p in parts if p not in alphabet]
    if bad:
        raise SymbolError(f"symbol {bad[0]!r} not in alphabet {list(alphabet)}")
    return parts


def as_word(u, alphabet):
    """Accept a word as text or as a sequence of symbols."""
    if isinstance(u, str):
        return parse_word(u, alphabet)
    u = tuple(u)
    for s in u:
        if s not in alphabet:
            raise SymbolError(f"symbol {s!r} not in alphabet {list(alphabet)}")
    return u


def word_key(word, alphabet):
    """Length-then-lexicographic order by alphabet position."""
    index = {s: i for i, s in enumerate(alphabet)}
    return (len(word), tuple(index[s] for s in word))


def state_key(name, alphabet):
    """Sort key for state names: word-shaped names first, in word order."""
    try:
        word = parse_word(name, alphabet)
    except SymbolError:
        return (1, 0, (), name)
    return (0,) + word_key(word, alphabet) + (name,)


@dataclass(frozen=True)
class Lasso:
    """The ultimately periodic word ``prefix · cycle^ω``."""

    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("lasso cycle must be nonempty")

    def symbol(self, t):
        if t < len(self.prefix):
            return self.prefix[t]
        return self.cycle[(t - len(self.prefix)) % len(self.cycle)]

    def take(self, n):
        return tuple(self.symbol(t) for t in range(n))

    def text(self, alphabet):
        return f"{word_text(self.prefix, alphabet)};{word_text(self.cycle, alphabet)}"


# -- machines ----------------------------------------------------------------

class Transition(NamedTuple):
    src: str
    symbol: str
    dst: str
    guard: TimeSet


@dataclass(frozen=True, eq=True)
class Machine:
    """An immutable machine in canonical form; build it with :meth:`create`."""

    alphabet: tuple
    states: tuple
    initial: tuple
    transitions: tuple

    @classmethod
    def create(cls, alphabet, states, initial, transitions):
        """Validate, merge duplicate transitions and sort everything canonically.

        ``transitions`` holds ``(src, symbol, dst)`` or ``(src, symbol, dst, guard)``
        tuples; a missing or ``None`` guard means all times.
        """
        alphabet = tuple(alphabet)
        if not alphabet:
            raise SchemaError("alphabet must be nonempty")
        if len(set(alphabet)) != len(alphabet):
            raise SchemaError("duplicate symbol in alphabet")
        states = list(states)
        if len(set(states)) != len(states):
            raise SchemaError("duplicate state name")
        declared = set(states)
        initial = set(initial)
        for x in initial:
            if x not in declared:
                raise SchemaError(f"initial state {x!r} is not declared")
        merged = {}
        for tr in transitions:
            src, sym, dst = tr[:3]
            guard = tr[3] if len(tr) > 3 and tr[3] is not None else TimeSet.all()
            if src not in declared:
                raise SchemaError(f"transition source {src!r} is not declared")
            if dst not in declared:
                raise SchemaError(f"transition target {dst!r} is not declared")
            if sym not in alphabet:
                raise SchemaError(f"transition symbol {sym!r} is not in the alphabet")
            if not isinstance(guard, TimeSet):
                raise SchemaError(f"guard must be a TimeSet, got {guard!r}")
            guard = TimeSet.make(guard.explicit, guard.start, guard.period, guard.residues)
            key = (src, sym, dst)
            merged[key] = merged[key] | guard if key in merged else guard
        skey = {x: state_key(x, alphabet) for x in states}
        sym_index = {s: i for i, s in enumerate(alphabet)}
        ordered = sorted(
            (Transition(*k, g) for k, g in merged.items() if not g.is_empty),
            key=lambda tr: (skey[tr.src], sym_index[tr.symbol], skey[tr.dst]),
        )
        return cls(
            alphabet,
            tuple(sorted(states, key=skey.__getitem__)),
            tuple(sorted(initial, key=skey.__getitem__)),
            tuple(ordered),
        )

    @classmethod
    def empty(cls, alphabet):
        return cls.create(alphabet, (), (), ())

    @property
    def is_fsm(self):
        return all(tr.guard.is_all for tr in self.transitions)

    @property
    def kind(self):
        return "fsm" if self.is_fsm else "tfsm"

    @cached_property
    def clock(self):
        return Clock.for_sets(tr.guard for tr in self.transitions)

    @cached_property
    def _succ(self):
        # _succ[phase][state] -> [(symbol, dst), ...] in canonical order
        table = []
        for ph in range(self.clock.size):
            row = {x: [] for x in self.states}
            for tr in self.transitions:
                if tr.guard.contains(ph):
                    row[tr.src].append((tr.symbol, tr.dst))
            table.append(row)
        return table

    def edges(self, x, t):
        """Transitions ``(symbol, dst)`` leaving ``x`` that may fire at time ``t``."""
        return self._succ[self.clock.phase(t)][x]

    @cached_property
    def live(self):
        """Configurations ``(state, phase)`` from which an infinite run exists."""
        clock = self.clock
        count = {}
        preds = {}
        for ph in range(clock.size):
            nxt = clock.next(ph)
            for x in self.states:
                out = self._succ[ph][x]
                count[(x, ph)] = len(out)
                for _, dst in out:
                    preds.setdefault((dst, nxt), []).append((x, ph))
        dead = deque(c for c, n in count.items() if n == 0)
        alive = set(count)
        while dead:
            c = dead.popleft()
            alive.discard(c)
            for p in preds.get(c, ()):
                count[p] -= 1
                if count[p] == 0:
                    dead.append(p)
        return frozenset(alive)

    def is_live(self, x, t):
        return (x, self.clock.phase(t)) in self.live

    @cached_property
    def _live_succ(self):
        # _live_succ[phase][state][symbol] -> destinations live one step later
        live = self.live
        table = []
        for ph in range(self.clock.size):
            nxt = self.clock.next(ph)
            row = {}
            for x in self.states:
                by_sym = {}
                for sym, dst in self._succ[ph][x]:
                    if (dst, nxt) in live:
                        by_sym.setdefault(sym, []).append(dst)
                row[x] = by_sym
            table.append(row)
        return table

    @cached_property
    def _step_memo(self):
        return {}

    @cached_property
    def _memo(self):
        # results of derived computations (domino windows) keyed by the caller
        return {}

    def live_step(self, states, t, symbol):
        """Live successors at ``t + 1`` of ``states`` (at ``t``) under ``symbol``."""
        return self.step_at_phase(states, self.clock.phase(t), symbol)

    def step_at_phase(self, states, ph, symbol):
        """:meth:`live_step` for a time already reduced to its phase."""
        key = (states, ph, symbol)
        memo = self._step_memo
        hit = memo.get(key)
        if hit is None:
            row = self._live_succ[ph]
            out = set()
            for x in states:
                out.update(row[x].get(symbol, ()))
            hit = memo[key] = frozenset(out)
        return hit

    def live_initial(self):
        return frozenset(x for x in self.initial if self.is_live(x, 0))

    @cached_property
    def reach_cycle(self):
        """Exact reachable sets as ``(sets, start, period)``.

        ``sets[t]`` is the set of states reachable at time ``t`` for
        ``t < start + period``; the pair (set, phase) recurs with ``period``.
        """
        clock = self.clock
        seen = {}
        sets = []
        current, ph = frozenset(self.initial), 0
        while (current, ph) not in seen:
            seen[(current, ph)] = len(sets)
            sets.append(current)
            nxt = set()
            for x in current:
                nxt.update(dst for _, dst in self._succ[ph][x])
            current, ph = frozenset(nxt), clock.next(ph)
        start = seen[(current, ph)]
        return sets, start, len(sets) - start

    def reach_index(self, t):
        """Index into :attr:`reach_cycle` for time ``t``."""
        _, start, period = self.reach_cycle
        return t if t < start else start + (t - start) % period

    def reachable_at(self, t):
        sets, _, _ = self.reach_cycle
        return sets[self.reach_index(t)]

    def live_at(self, t):
        """States reachable at ``t`` that still admit an infinite run."""
        return frozenset(x for x in self.reachable_at(t) if self.is_live(x, t))

    def __str__(self):
        return (f"Machine({self.kind}, {len(self.states)} states, "
                f"{len(self.transitions)} transitions)")


def validate(m):
    """Re-check every machine and guard invariant; raises :class:`SchemaError`."""
    rebuilt = Machine.create(m.alphabet, m.states, m.initial, m.transitions)
    if rebuilt != m:
        raise SchemaError("machine is not in canonical form")


def timeset_member(ts, t):
    return ts.contains(t)


def is_empty(m):
    return not m.live_initial()


# -- reachability profile -------------------------------------------------------

@dataclass(frozen=True)
class ReachProfile:
    prefix_sets: tuple
    start: int
    period: int
    cycle_sets: tuple

    def at(self, t):
        if t < self.start:
            return self.prefix_sets[t]
        return self.cycle_sets[(t - self.start) % self.period]


def reach_profile(m):
    """Canonical eventually periodic summary of ``t -> R_t``."""
    sets, start, period = m.reach_cycle
    start, period = minimize_cycle(sets, start, period)
    return ReachProfile(tuple(sets[:start]), start, period, tuple(sets[start:start + period]))


# -- trimming ------------------------------------------------------------------

def occupancy(m):
    """Per state, the times at which it is both reachable and live."""
    sets, start, period = m.reach_cycle
    out = {}
    for x in m.states:
        flags = [x in sets[t] and m.is_live(x, t) for t in range(start + period)]
        out[x] = TimeSet.from_pattern(flags, start, period)
    return out


def trim(m):
    """Drop every unreachable or dead (state, time) and narrow guards.

    A transition keeps exactly the times at which its source is reachable
    and live and its target is live one step later. When that covers every
    such time of the source, the guard is widened to all times instead; this
    only adds times at which the source cannot be occupied, so the behavior
    is unchanged and FSMs stay FSMs.
    """
    sets, start, period = m.reach_cycle
    occ = occupancy(m)
    keep = [x for x in m.states if not occ[x].is_empty]
    transitions = []
    for tr in m.transitions:
        if occ[tr.src].is_empty:
            continue
        flags = [
            tr.src in sets[t] and m.is_live(tr.src, t) and tr.guard.contains(t)
            and m.is_live(tr.dst, t + 1)
            for t in range(start + period)
        ]
        useful = TimeSet.from_pattern(flags, start, period)
        if useful.is_empty:
            continue
        guard = TimeSet.all() if useful == occ[tr.src] else useful
        transitions.append((tr.src, tr.symbol, tr.dst, guard))
    initial = [x for x in m.initial if 0 in occ[x]]
    return Machine.create(m.alphabet, keep, initial, transitions)


# -- membership ----------------------------------------------------------------

def is_live_prefix(m, u):
    """Whether ``u`` is the restriction to ``[0, |u|-1]`` of some behavior word."""
    u = as_word(u, m.alphabet)
    current = m.live_initial()
    for t, sym in enumerate(u):
        if not current:
            return False
        current = m.live_step(current, t, sym)
    return bool(current)


def lasso_member(m, w):
    """Whether ``w.prefix · w.cycle^ω`` belongs to the behavior of ``m``."""
    as_word(w.prefix, m.alphabet)
    as_word(w.cycle, m.alphabet)
    clock = m.clock
    current = m.live_initial()
    n = len(w.prefix)
    for t in range(n):
        if not current:
            return False
        current = m.live_step(current, t, w.prefix[t])
    seen = set()
    t, pos = n, 0
    while current:
        key = (pos, clock.phase(t), current)
        if key in seen:
            return True
        seen.add(key)
        current = m.live_step(current, t, w.cycle[pos])
        t, pos = t + 1, (pos + 1) % len(w.cycle)
    return False


def least_continuation(m, states, t):
    """Lexicographically least infinite word readable from live ``states`` at ``t``.

    Returned as ``(prefix, cycle)``; ``states`` must be nonempty and live.
    """
    clock = m.clock
    symbols = []
    seen = {}
    current = frozenset(states)
    while True:
        key = (current, clock.phase(t))
        if key in seen:
            j = seen[key]
            return tuple(symbols[:j]), tuple(symbols[j:])
        seen[key] = len(symbols)
        for sym in m.alphabet:
            nxt = m.live_step(current, t, sym)
            if nxt:
                break
        else:  # pragma: no cover - live configurations always continue
            raise AssertionError("live configuration without a live successor")
        symbols.append(sym)
        current = nxt
        t += 1
