"""Shift, inclusion, equivalence and time invariance of machine behaviors.

Behaviors of machines are limit-closed, so ``B1 ⊆ B2`` holds exactly when
every live prefix of ``B1`` is a live prefix of ``B2``. Inclusion is decided
by a breadth-first subset construction over
``(small state, set of big states, phase)``. Both machines must be trim.
"""

import os
from dataclasses import dataclass
from typing import Optional

from .errors import AlphabetMismatch, ResourceLimit
from .machine import Lasso, Machine, least_continuation, state_key, trim

DEFAULT_NODE_BUDGET = 1_000_000


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[Lasso] = None
    note: str = ""

    def __bool__(self):
        return self.holds


def node_budget():
    value = os.environ.get("ALCA_NODE_BUDGET")
    return int(value) if value else DEFAULT_NODE_BUDGET


def shift(m):
    """Machine for the behavior with the first symbol of every word dropped."""
    starts = set()
    for x in m.initial:
        starts.update(dst for _, dst in m.edges(x, 0))
    transitions = [(tr.src, tr.symbol, tr.dst, tr.guard.shift_down(1)) for tr in m.transitions]
    return trim(Machine.create(m.alphabet, m.states, starts, transitions))


def _check_alphabets(a, b):
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatch(f"alphabets differ: {list(a.alphabet)} vs {list(b.alphabet)}")


def includes(big, small, budget=None):
    """Decide ``behavior(small) ⊆ behavior(big)``.

    On failure the witness is a lasso in ``behavior(small)`` whose shortest
    prefix leaving ``behavior(big)`` is found first in breadth-first,
    alphabet-ordered search, followed by the least infinite continuation
    inside ``small``.
    """
    _check_alphabets(big, small)
    budget = node_budget() if budget is None else budget
    clock = big.clock.join(small.clock)
    big_init = big.live_initial()
    skey = {x: state_key(x, small.alphabet) for x in small.states}

    # Level-by-level search. Each node keeps the alphabetically least of the
    # shortest words reaching it. Nodes on a level carry the dense rank of
    # that word, so a child's word order is (rank of parent, symbol index).
    parent = {}
    level = []
    for x in sorted(small.live_initial(), key=skey.__getitem__):
        node = (x, big_init, 0)
        if node not in parent:
            parent[node] = None
            level.append(node)
    ranks = [0] * len(level)
    sym_index = {s: i for i, s in enumerate(small.alphabet)}
    # joint phase -> next joint phase and the phases of either machine
    nxt = [clock.next(ph) for ph in range(clock.size)]
    big_ph = [big.clock.phase(ph) for ph in range(clock.size)]
    small_rows = [small._live_succ[small.clock.phase(ph)] for ph in range(clock.size)]
    step = big.step_at_phase
    while level:
        for node in level:
            if not node[1]:
                return Verdict(False, _witness(small, node, parent), "small has a word outside big")
        best = {}
        for rank, node in zip(ranks, level):
            x, bigset, ph = node
            nph = nxt[ph]
            for sym, targets in small_rows[ph][x].items():
                bignext = step(bigset, big_ph[ph], sym)
                key = (rank, sym_index[sym])
                for dst in targets:
                    child = (dst, bignext, nph)
                    if child in parent:
                        continue
                    if child not in best or key < best[child][0]:
                        best[child] = (key, node, sym)
        if len(parent) + len(best) > budget:
            raise ResourceLimit(f"inclusion check exceeded {budget} product nodes")
        level = sorted(best, key=lambda c: (best[c][0], skey[c[0]]))
        ranks, prev = [], None
        for child in level:
            key = best[child][0]
            ranks.append(ranks[-1] + (key != prev) if ranks else 0)
            prev = key
        for child in level:
            _, node, sym = best[child]
            parent[child] = (node, sym)
    return Verdict(True)


def _witness(small, node, parent):
    word = []
    cur = node
    while parent[cur] is not None:
        cur, sym = parent[cur]
        word.append(sym)
    word.reverse()
    # the phase in node is only a representative; continue at the true time
    t = len(word)
    prefix, cycle = least_continuation(small, {node[0]}, t)
    return Lasso(tuple(word) + prefix, cycle)


def equivalent(a, b, budget=None):
    """Mutual inclusion; the witness comes from the first failing direction."""
    forward = includes(a, b, budget)
    if not forward:
        return Verdict(False, forward.witness, "second machine has a word outside the first")
    backward = includes(b, a, budget)
    if not backward:
        return Verdict(False, backward.witness, "first machine has a word outside the second")
    return Verdict(True)


def is_time_invariant(m, budget=None):
    """``σB ⊆ B``."""
    v = includes(m, shift(m), budget)
    if v:
        return v
    return Verdict(False, v.witness, "witness is in the shifted behavior but not in the behavior")


def is_strictly_time_invariant(m, budget=None):
    """``σB = B``."""
    shifted = shift(m)
    v = includes(m, shifted, budget)
    if not v:
        return Verdict(False, v.witness, "witness is in the shifted behavior but not in the behavior")
    v = includes(shifted, m, budget)
    if not v:
        return Verdict(False, v.witness, "witness is in the behavior but not in the shifted behavior")
    return Verdict(True)
