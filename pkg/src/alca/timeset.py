"""Eventually periodic subsets of the natural time axis.

A :class:`TimeSet` holds a finite set of early times plus a periodic tail::

    t in T  <=>  t in explicit  or  (t >= start and (t - start) % period in residues)

Every constructor goes through :meth:`TimeSet.make`, which returns the
canonical form (minimal period, then minimal start, explicit times only
below start), so structural equality is set equality.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .errors import SchemaError


def minimize_cycle(values, start, period):
    """Shrink an eventually periodic sequence description.

    ``values`` must cover indices ``0 .. start + period - 1`` and satisfy
    ``values[t] == values[t + period]`` for ``t >= start`` implicitly (the
    caller only stores one period). Returns ``(start, period)`` with the
    period minimal and then the start minimal.
    """
    if period < 1:
        raise ValueError("period must be positive")
    if len(values) < start + period:
        raise ValueError("values must cover start + period entries")
    cycle = values[start:start + period]
    best = period
    for p in range(1, period):
        if period % p == 0 and all(cycle[i] == cycle[i % p] for i in range(period)):
            best = p
            break
    while start > 0 and values[start - 1] == values[start - 1 + best]:
        start -= 1
    return start, best


@dataclass(frozen=True)
class TimeSet:
    explicit: frozenset
    start: int
    period: int
    residues: frozenset

    def __post_init__(self):
        if not isinstance(self.period, int) or self.period < 1:
            raise SchemaError(f"time set period must be a positive integer, got {self.period!r}")
        if not isinstance(self.start, int) or self.start < 0:
            raise SchemaError(f"time set 'from' must be a natural number, got {self.start!r}")
        for r in self.residues:
            if not isinstance(r, int) or not 0 <= r < self.period:
                raise SchemaError(f"residue {r!r} outside [0, {self.period})")
        for t in self.explicit:
            if not isinstance(t, int) or not 0 <= t < self.start:
                raise SchemaError(f"explicit time {t!r} not below 'from' = {self.start}")

    @classmethod
    def make(cls, explicit=(), start=0, period=1, residues=()):
        """Validate the raw description and return its canonical form."""
        return _canonical(cls(frozenset(explicit), start, period, frozenset(residues)))

    @classmethod
    def from_pattern(cls, values, start, period):
        """Build from membership flags for ``t < start + period``."""
        start, period = minimize_cycle(list(values), start, period)
        explicit = frozenset(t for t in range(start) if values[t])
        residues = frozenset(i for i in range(period) if values[start + i])
        return cls(explicit, start, period, residues)

    @classmethod
    def all(cls):
        return _ALL

    @classmethod
    def empty(cls):
        return _EMPTY

    @classmethod
    def singleton(cls, t):
        return cls.make(explicit=(t,), start=t + 1)

    @classmethod
    def at_least(cls, t):
        return cls.make(start=t, residues=(0,))

    def contains(self, t):
        if t in self.explicit:
            return True
        return t >= self.start and (t - self.start) % self.period in self.residues

    __contains__ = contains

    @property
    def is_all(self):
        return self == _ALL

    @property
    def is_empty(self):
        return not self.explicit and not self.residues

    def pattern(self, start, period):
        """Membership flags for ``t < start + period``; needs a compatible clock."""
        return [self.contains(t) for t in range(start + period)]

    def _combine(self, other, op):
        start = max(self.start, other.start)
        period = lcm(self.period, other.period)
        values = [op(self.contains(t), other.contains(t)) for t in range(start + period)]
        return TimeSet.from_pattern(values, start, period)

    def union(self, other):
        return self._combine(other, lambda a, b: a or b)

    def intersection(self, other):
        return self._combine(other, lambda a, b: a and b)

    def difference(self, other):
        return self._combine(other, lambda a, b: a and not b)

    def complement(self):
        return TimeSet.from_pattern(
            [not v for v in self.pattern(self.start, self.period)], self.start, self.period
        )

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def shift_down(self, k=1):
        """The set ``{t : t + k in self}``."""
        start = max(self.start - k, 0)
        values = [self.contains(t + k) for t in range(start + self.period)]
        return TimeSet.from_pattern(values, start, self.period)

    def shift_up(self, k=1):
        """The set ``{t + k : t in self}``."""
        start = self.start + k
        values = [t >= k and self.contains(t - k) for t in range(start + self.period)]
        return TimeSet.from_pattern(values, start, self.period)

    def __str__(self):
        if self.is_all:
            return "all"
        if self.is_empty:
            return "{}"
        parts = []
        if self.explicit:
            parts.append("{" + ",".join(str(t) for t in sorted(self.explicit)) + "}")
        if self.residues:
            if self.period == 1:
                parts.append(f"t>={self.start}")
            else:
                shifted = f"(t-{self.start})" if self.start else "t"
                res = ",".join(str(r) for r in sorted(self.residues))
                tail = f"{shifted}%{self.period} in {{{res}}}"
                parts.append(f"t>={self.start} & {tail}" if self.start else tail)
        return " | ".join(parts)


_ALL = TimeSet(frozenset(), 0, 1, frozenset({0}))
_EMPTY = TimeSet(frozenset(), 0, 1, frozenset())


@lru_cache(maxsize=4096)
def _canonical(raw):
    flags = [raw.contains(t) for t in range(raw.start + raw.period)]
    return TimeSet.from_pattern(flags, raw.start, raw.period)


class Clock:
    """Phase bookkeeping for a family of time sets.

    Times below ``start`` are their own phase; later times fold onto
    ``start + (t - start) % period``. A phase is therefore itself a
    representative time, and any guard whose start is at most ``start`` and
    whose period divides ``period`` has the same membership at ``t`` and at
    ``phase(t)``.
    """

    __slots__ = ("start", "period")

    def __init__(self, start=0, period=1):
        self.start = start
        self.period = period

    @classmethod
    def for_sets(cls, timesets):
        start, period = 0, 1
        for ts in timesets:
            start = max(start, ts.start)
            period = lcm(period, ts.period)
        return cls(start, period)

    def join(self, other):
        return Clock(max(self.start, other.start), lcm(self.period, other.period))

    @property
    def size(self):
        return self.start + self.period

    def phase(self, t):
        if t < self.start:
            return t
        return self.start + (t - self.start) % self.period

    def next(self, ph):
        ph += 1
        return ph if ph < self.start + self.period else self.start

    def __repr__(self):
        return f"Clock(start={self.start}, period={self.period})"
