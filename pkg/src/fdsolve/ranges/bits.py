"""Bitset ranges over a fixed universe ``[0, size - 1]``.

The set is an arbitrary-precision int used as a bit vector.  Elements that
would fall outside the universe are silently dropped; an operation whose
result has no element left returns ``None``.
"""

from dataclasses import dataclass

from ..errors import ContractError
from .base import Range, RangeKind
from .bounds import NEG_INF, POS_INF, check_bound


def lowest_bit(mask):
    """Index of the least significant set bit (``mask`` must be non-zero)."""
    return (mask & -mask).bit_length() - 1


def highest_bit(mask):
    return mask.bit_length() - 1


def popcount(mask):
    return mask.bit_count()


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BitsRange(Range):
    __slots__ = ("mask", "kind")

    def __init__(self, mask, kind):
        self.mask = mask
        self.kind = kind

    def _make(self, mask):
        return BitsRange(mask, self.kind) if mask else None

    def intersect(self, other):
        m = self.mask & other.mask
        if m == self.mask:
            return self
        return BitsRange(m, self.kind) if m else None

    def union(self, other):
        return BitsRange(self.mask | other.mask, self.kind)

    def complement(self):
        return self._make(self.kind.full_mask & ~self.mask)

    def add(self, n):
        if n == 0:
            return self
        if n > 0:
            return self._make((self.mask << n) & self.kind.full_mask)
        return self._make(self.mask >> -n)

    def mul(self, n):
        if n == 1:
            return self
        if n == 0:
            return self._make(1)
        size = self.kind.size
        m = 0
        for x in iter_bits(self.mask):
            y = x * n
            if 0 <= y < size:
                m |= 1 << y
        return self._make(m)

    def remove(self, value):
        if 0 <= value < self.kind.size and (self.mask >> value) & 1:
            m = self.mask & ~(1 << value)
            return BitsRange(m, self.kind) if m else None
        return self

    def contains(self, value):
        return 0 <= value < self.kind.size and bool((self.mask >> value) & 1)

    def is_singleton(self):
        m = self.mask
        return m & (m - 1) == 0

    def singleton_value(self):
        m = self.mask
        if m & (m - 1):
            raise ContractError(f"range {self} is not a singleton")
        return m.bit_length() - 1

    def size(self):
        return self.mask.bit_count()

    def min(self):
        m = self.mask
        return (m & -m).bit_length() - 1

    def max(self):
        return self.mask.bit_length() - 1

    def enum(self):
        return iter_bits(self.mask)

    def get_domain(self):
        return list(iter_bits(self.mask))

    def intervals(self):
        out = []
        m = self.mask
        base = 0
        while m:
            tz = (m & -m).bit_length() - 1
            m >>= tz
            base += tz
            run = (~m & (m + 1)).bit_length() - 1  # length of the low run of ones
            out.append((base, base + run - 1))
            m >>= run
            base += run
        return out

    def __eq__(self, other):
        if isinstance(other, BitsRange):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self):
        return hash(self.mask)


@dataclass(frozen=True)
class Bits(RangeKind):
    """Bitset ranges over ``[0, size - 1]``."""

    size: int = 1024
    name = "bits"

    def __post_init__(self):
        if self.size <= 0:
            raise ValueError("universe size must be positive")
        object.__setattr__(self, "full_mask", (1 << self.size) - 1)

    @property
    def universe_bounds(self):
        return (0, self.size - 1)

    def interval(self, lo, hi):
        lo = check_bound(lo)
        hi = check_bound(hi)
        if lo < 0:
            lo = 0
        if hi >= self.size:
            hi = self.size - 1
        if lo > hi or lo == POS_INF or hi == NEG_INF:
            return None
        return BitsRange(((1 << (hi - lo + 1)) - 1) << lo, self)

    def singleton(self, value):
        if 0 <= value < self.size:
            return BitsRange(1 << value, self)
        return None

    def universe(self):
        return BitsRange(self.full_mask, self)

    def from_values(self, values):
        m = 0
        size = self.size
        for v in values:
            if 0 <= v < size:
                m |= 1 << v
        return BitsRange(m, self) if m else None

    def bound_const(self, name):
        if name == "inf":
            return 0
        if name == "sup":
            return self.size - 1
        raise ValueError(f"unknown bound constant {name!r}")
