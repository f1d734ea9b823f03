"""Abstract range interface shared by every representation.

Ranges are immutable, never empty sets of integers.  Every operation that
would produce the empty set returns ``None`` instead; callers treat ``None``
as constraint failure.
"""

import re

from ..errors import ContractError, FdSyntaxError
from .bounds import NEG_INF, POS_INF, format_bound


class Range:
    """A non-empty set of integers.

    Concrete subclasses hold a reference to the :class:`RangeKind` that built
    them, so set operations can build results of the same kind (complement
    needs the kind's universe).
    """

    __slots__ = ()

    # -- construction helpers -------------------------------------------

    def union(self, other):
        raise NotImplementedError

    def intersect(self, other):
        raise NotImplementedError

    def complement(self):
        raise NotImplementedError

    def add(self, n):
        raise NotImplementedError

    def sub(self, n):
        return self.add(-n)

    def mul(self, n):
        raise NotImplementedError

    def remove(self, value):
        """Return the range without *value*; ``self`` if absent, ``None`` if empty."""
        raise NotImplementedError

    # -- queries -----------------------------------------------------------

    def contains(self, value):
        raise NotImplementedError

    def __contains__(self, value):
        return self.contains(value)

    def is_singleton(self):
        raise NotImplementedError

    def singleton_value(self):
        if not self.is_singleton():
            raise ContractError(f"range {self} is not a singleton")
        return self.min()

    def size(self):
        raise NotImplementedError

    def min(self):
        raise NotImplementedError

    def max(self):
        raise NotImplementedError

    def intervals(self):
        """Maximal intervals as ``(lo, hi)`` pairs, ascending."""
        raise NotImplementedError

    def get_domain(self):
        return list(self.enum())

    def enum(self):
        """Yield the elements in ascending order."""
        if self.size() == POS_INF:
            raise ContractError(f"cannot enumerate unbounded range {self}")
        for lo, hi in self.intervals():
            yield from range(lo, hi + 1)

    def __iter__(self):
        return self.enum()

    def __len__(self):
        n = self.size()
        if n == POS_INF:
            raise ContractError(f"range {self} is unbounded")
        return n

    def __str__(self):
        parts = []
        for lo, hi in self.intervals():
            if lo == hi:
                parts.append(format_bound(lo))
            else:
                parts.append(f"{format_bound(lo)}..{format_bound(hi)}")
        return "{" + ", ".join(parts) + "}"

    def __repr__(self):
        return f"<{type(self).__name__} {self}>"


_ITEM = re.compile(r"\s*(-?\d+|inf|sup)\s*(?:\.\.\s*(-?\d+|inf|sup)\s*)?$")


class RangeKind:
    """Factory for one range representation."""

    name = "abstract"

    def interval(self, lo, hi):
        raise NotImplementedError

    def singleton(self, value):
        raise NotImplementedError

    def universe(self):
        raise NotImplementedError

    def bound_const(self, name):
        """Map the indexical constants ``inf``/``sup`` to bounds."""
        raise NotImplementedError

    def from_intervals(self, pairs):
        """Union of the given ``(lo, hi)`` pairs; ``None`` if all are empty."""
        result = None
        for lo, hi in pairs:
            r = self.interval(lo, hi)
            if r is not None:
                result = r if result is None else result.union(r)
        return result

    def from_values(self, values):
        return self.from_intervals((v, v) for v in values)

    def parse(self, text):
        """Parse the debugging form ``{1..3, 5, 9..12}``."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise FdSyntaxError(f"range literal must be braced: {text!r}")
        body = body[1:-1].strip()
        if not body:
            raise FdSyntaxError("empty range literal")
        pairs = []
        for item in body.split(","):
            m = _ITEM.match(item)
            if not m:
                raise FdSyntaxError(f"bad range item {item.strip()!r}")
            lo = _parse_bound(m.group(1))
            hi = _parse_bound(m.group(2)) if m.group(2) else lo
            pairs.append((lo, hi))
        result = self.from_intervals(pairs)
        if result is None:
            raise FdSyntaxError(f"range literal {text!r} denotes the empty set")
        return result


def _parse_bound(tok):
    if tok == "inf":
        return NEG_INF
    if tok == "sup":
        return POS_INF
    return int(tok)
