"""Decision procedures for synchronous and asynchronous l-completeness."""

from dataclasses import dataclass
from typing import Optional

from .approx import strongest_async, strongest_sync
from .behavior import includes
from .machine import Lasso

KINDS = ("sync", "async")

_COMPLETE_NOTE = (
    "machine behaviors are limit-closed (complete), so having memory span l "
    "and being l-complete are the same property here"
)


@dataclass(frozen=True)
class CompletenessReport:
    kind: str
    l: int
    holds: bool
    witness: Optional[Lasso]
    approximation_state_count: int
    note: str = ""

    def __bool__(self):
        return self.holds


def approximation(m, l, kind):
    if kind == "sync":
        return strongest_sync(m, l)
    if kind == "async":
        return strongest_async(m, l)
    raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def _report(m, l, kind, budget=None):
    approx = approximation(m, l, kind)
    # the approximation always contains m, so one direction decides equality
    v = includes(m, approx, budget)
    return CompletenessReport(kind, l, v.holds, v.witness, len(approx.states))


def is_sync_l_complete(m, l, budget=None):
    return _report(m, l, "sync", budget)


def is_async_l_complete(m, l, budget=None):
    return _report(m, l, "async", budget)


def minimal_l(m, kind, l_max, budget=None):
    """Least ``l <= l_max`` for which the check of ``kind`` holds, else None."""
    for l in range(l_max + 1):
        if _report(m, l, kind, budget).holds:
            return l
    return None


def memory_span_report(m, l, kind, budget=None):
    r = _report(m, l, kind, budget)
    return CompletenessReport(r.kind, r.l, r.holds, r.witness, r.approximation_state_count,
                              _COMPLETE_NOTE)
