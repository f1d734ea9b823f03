"""Integer ranges: three interchangeable representations behind one interface.

>>> k = Closed(0, 63)
>>> r = k.interval(1, 3).union(k.singleton(5))
>>> str(r), r.size()
('{1..3, 5}', 4)
"""

import os

from .base import Range, RangeKind
from .bits import Bits, BitsRange, highest_bit, iter_bits, lowest_bit, popcount
from .bounds import (
    INFINITE,
    NEG_INF,
    POS_INF,
    bound_add,
    bound_mul,
    bound_sub,
    format_bound,
    is_finite,
)
from .intervals import Closed, IntervalRange, Open, validate_intervals

__all__ = [
    "Bits", "BitsRange", "Closed", "INFINITE", "IntervalRange", "NEG_INF", "Open",
    "POS_INF", "Range", "RangeKind", "bound_add", "bound_mul", "bound_sub",
    "format_bound", "highest_bit", "is_finite", "iter_bits", "lowest_bit",
    "make_kind", "parse_universe", "popcount", "validate", "validate_intervals",
]


def parse_universe(text):
    """Parse ``"lo..hi"`` into a pair of ints."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"universe must look like lo..hi, got {text!r}")
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise ValueError(f"empty universe {text!r}")
    return lo, hi


def make_kind(name, universe=None):
    """Build a range kind by name.

    *universe* is an optional ``(lo, hi)`` pair; when omitted the
    ``FD_DEFAULT_UNIVERSE`` environment variable (``lo..hi``) is consulted,
    then the built-in defaults.  The bits kind needs ``lo == 0``.
    """
    if universe is None and os.environ.get("FD_DEFAULT_UNIVERSE"):
        universe = parse_universe(os.environ["FD_DEFAULT_UNIVERSE"])
    if name == "open":
        return Open()
    if name == "closed":
        return Closed(*universe) if universe else Closed()
    if name == "bits":
        if universe is None:
            return Bits()
        lo, hi = universe
        if lo != 0:
            raise ValueError("the bits representation needs a universe starting at 0")
        return Bits(hi + 1)
    raise ValueError(f"unknown range kind {name!r}")


def validate(r):
    """Assert the representation invariants of *r*."""
    if isinstance(r, IntervalRange):
        validate_intervals(r.ivs)
        if not isinstance(r.kind, Open):
            assert all(is_finite(b) for iv in r.ivs for b in iv), "infinite bound"
    elif isinstance(r, BitsRange):
        assert r.mask > 0, "empty bitset"
        assert r.mask <= r.kind.full_mask, "bits outside universe"
    else:
        raise TypeError(f"not a range: {r!r}")
