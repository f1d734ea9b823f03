"""Interval-list ranges: the ``closed`` and ``open`` representations.

A range is a tuple of ``(lo, hi)`` pairs, sorted, pairwise disjoint and
separated by at least one missing integer.  The two kinds share this code;
they differ in their universe (complement, ``inf``/``sup`` constants) and in
whether infinite endpoints may appear.
"""

from bisect import bisect_right
from dataclasses import dataclass

from ..errors import ContractError
from .base import Range, RangeKind
from .bounds import INFINITE, NEG_INF, POS_INF, check_bound

#: Upper limit on intervals produced by pointwise multiplication.
MUL_EXPANSION_LIMIT = 1 << 20


class IntervalRange(Range):
    __slots__ = ("ivs", "kind", "_size")

    def __init__(self, ivs, kind):
        self.ivs = ivs
        self.kind = kind
        self._size = None

    def _make(self, out):
        return IntervalRange(tuple(out), self.kind) if out else None

    # -- set algebra ---------------------------------------------------

    def intersect(self, other):
        a = self.ivs
        b = other.ivs
        if len(a) == 1 and len(b) == 1:
            (alo, ahi), (blo, bhi) = a[0], b[0]
            lo = alo if alo > blo else blo
            hi = ahi if ahi < bhi else bhi
            if lo > hi:
                return None
            if lo == alo and hi == ahi:
                return self
            return IntervalRange(((lo, hi),), self.kind)
        out = []
        i = j = 0
        na, nb = len(a), len(b)
        while i < na and j < nb:
            alo, ahi = a[i]
            blo, bhi = b[j]
            lo = alo if alo > blo else blo
            hi = ahi if ahi < bhi else bhi
            if lo <= hi:
                out.append((lo, hi))
            if ahi < bhi:
                i += 1
            else:
                j += 1
        if not out:
            return None
        out = tuple(out)
        if out == a:
            return self
        return IntervalRange(out, self.kind)

    def union(self, other):
        merged = sorted(self.ivs + other.ivs)
        out = [merged[0]]
        for lo, hi in merged[1:]:
            plo, phi = out[-1]
            if lo <= phi + 1:
                if hi > phi:
                    out[-1] = (plo, hi)
            else:
                out.append((lo, hi))
        return IntervalRange(tuple(out), self.kind)

    def complement(self):
        ulo, uhi = self.kind.universe_bounds
        out = []
        nxt = ulo
        for lo, hi in self.ivs:
            if hi < nxt:
                continue
            if lo > uhi:
                break
            if lo > nxt:
                out.append((nxt, lo - 1))
            if hi >= uhi:
                nxt = None
                break
            nxt = hi + 1
        if nxt is not None and nxt <= uhi:
            out.append((nxt, uhi))
        return self._make(out)

    def add(self, n):
        if n == 0:
            return self
        return IntervalRange(tuple((lo + n, hi + n) for lo, hi in self.ivs), self.kind)

    def mul(self, n):
        if n == 0:
            return IntervalRange(((0, 0),), self.kind)
        if n == 1:
            return self
        if n == -1:
            return IntervalRange(tuple((-hi, -lo) for lo, hi in reversed(self.ivs)), self.kind)
        size = self.size()
        if size == INFINITE:
            raise ContractError(f"pointwise multiplication of unbounded range {self} by {n}")
        if size > MUL_EXPANSION_LIMIT:
            raise ContractError(
                f"pointwise multiplication by {n} would need {size} intervals")
        out = [(x * n, x * n) for lo, hi in self.ivs for x in range(lo, hi + 1)]
        if n < 0:
            out.reverse()
        return IntervalRange(tuple(out), self.kind)

    def remove(self, value):
        ivs = self.ivs
        i = bisect_right(ivs, (value, POS_INF)) - 1
        if i < 0:
            return self
        lo, hi = ivs[i]
        if value > hi:
            return self
        if lo == hi:
            if len(ivs) == 1:
                return None
            return IntervalRange(ivs[:i] + ivs[i + 1:], self.kind)
        if value == lo:
            piece = ((lo + 1, hi),)
        elif value == hi:
            piece = ((lo, hi - 1),)
        else:
            piece = ((lo, value - 1), (value + 1, hi))
        return IntervalRange(ivs[:i] + piece + ivs[i + 1:], self.kind)

    # -- queries ---------------------------------------------------------

    def contains(self, value):
        ivs = self.ivs
        i = bisect_right(ivs, (value, POS_INF)) - 1
        return i >= 0 and value <= ivs[i][1]

    def is_singleton(self):
        ivs = self.ivs
        return len(ivs) == 1 and ivs[0][0] == ivs[0][1]

    def singleton_value(self):
        ivs = self.ivs
        if len(ivs) == 1 and ivs[0][0] == ivs[0][1]:
            return ivs[0][0]
        raise ContractError(f"range {self} is not a singleton")

    def size(self):
        s = self._size
        if s is None:
            s = 0
            for lo, hi in self.ivs:
                s += hi - lo + 1
            if s != INFINITE:
                s = int(s)
            self._size = s
        return s

    def min(self):
        return self.ivs[0][0]

    def max(self):
        return self.ivs[-1][1]

    def intervals(self):
        return list(self.ivs)

    def __eq__(self, other):
        if isinstance(other, IntervalRange):
            return self.ivs == other.ivs
        return NotImplemented

    def __hash__(self):
        return hash(self.ivs)


def validate_intervals(ivs):
    """Check the canonical-form invariants; raise ``AssertionError`` if broken."""
    assert ivs, "empty range"
    prev_hi = None
    for lo, hi in ivs:
        assert lo <= hi, f"reversed interval {(lo, hi)}"
        assert lo != POS_INF and hi != NEG_INF, f"degenerate interval {(lo, hi)}"
        if prev_hi is not None:
            assert lo > prev_hi + 1, f"intervals not separated at {lo}"
        prev_hi = hi


class _IntervalKind(RangeKind):
    def interval(self, lo, hi):
        lo = check_bound(lo)
        hi = check_bound(hi)
        ulo, uhi = self.universe_bounds
        if lo < ulo:
            lo = ulo
        if hi > uhi:
            hi = uhi
        if lo > hi or lo == POS_INF or hi == NEG_INF:
            return None
        return IntervalRange(((lo, hi),), self)

    def singleton(self, value):
        return IntervalRange(((value, value),), self)

    def from_values(self, values):
        vals = sorted(set(values))
        if not vals:
            return None
        out = []
        lo = hi = vals[0]
        for v in vals[1:]:
            if v == hi + 1:
                hi = v
            else:
                out.append((lo, hi))
                lo = hi = v
        out.append((lo, hi))
        return IntervalRange(tuple(out), self)

    def universe(self):
        return IntervalRange((self.universe_bounds,), self)


@dataclass(frozen=True)
class Closed(_IntervalKind):
    """Closed interval lists over a finite default universe.

    Values outside ``[lo, hi]`` may still appear (e.g. after ``mul(-1)``);
    the universe only bounds fresh variables, complement and ``inf``/``sup``.
    """

    lo: int = 0
    hi: int = (1 << 24) - 1
    name = "closed"

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty universe")

    @property
    def universe_bounds(self):
        return (self.lo, self.hi)

    def interval(self, lo, hi):
        # Infinite endpoints only clamp; finite ones are taken as given.
        lo = check_bound(lo)
        hi = check_bound(hi)
        if lo == NEG_INF:
            lo = self.lo
        elif lo == POS_INF:
            return None
        if hi == POS_INF:
            hi = self.hi
        elif hi == NEG_INF:
            return None
        if lo > hi:
            return None
        return IntervalRange(((lo, hi),), self)

    def bound_const(self, name):
        if name == "inf":
            return self.lo
        if name == "sup":
            return self.hi
        raise ValueError(f"unknown bound constant {name!r}")


@dataclass(frozen=True)
class Open(_IntervalKind):
    """Interval lists whose endpoints may be ``inf``/``sup``."""

    name = "open"

    @property
    def universe_bounds(self):
        return (NEG_INF, POS_INF)

    def bound_const(self, name):
        if name == "inf":
            return NEG_INF
        if name == "sup":
            return POS_INF
        raise ValueError(f"unknown bound constant {name!r}")
