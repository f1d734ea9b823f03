"""Extended integers used as range endpoints.

A bound is a plain ``int`` or one of the two float infinities.  Python
already orders ``-inf < n < inf`` for every int ``n``, so comparisons need
no wrapper; only arithmetic has to guard the indeterminate cases.
"""

import math

from ..errors import IndeterminateBound

NEG_INF = -math.inf
POS_INF = math.inf

#: Cardinality of an unbounded range.
INFINITE = math.inf


def is_finite(b):
    return b.__class__ is int


def bound_add(a, b):
    if a.__class__ is int and b.__class__ is int:
        return a + b
    r = a + b
    if r != r:
        raise IndeterminateBound(f"{format_bound(a)} + {format_bound(b)}")
    return r


def bound_sub(a, b):
    if a.__class__ is int and b.__class__ is int:
        return a - b
    r = a - b
    if r != r:
        raise IndeterminateBound(f"{format_bound(a)} - {format_bound(b)}")
    return r


def bound_mul(a, b):
    if a.__class__ is int and b.__class__ is int:
        return a * b
    if a == 0 or b == 0:
        raise IndeterminateBound(f"{format_bound(a)} * {format_bound(b)}")
    return a * b


def format_bound(b):
    if b == NEG_INF:
        return "inf"
    if b == POS_INF:
        return "sup"
    return str(b)


def check_bound(b):
    """Normalise *b* to an int or an infinity, rejecting anything else."""
    if b.__class__ is int:
        return b
    if isinstance(b, bool):
        raise TypeError("bool is not a bound")
    if isinstance(b, int):
        return int(b)
    if isinstance(b, float) and math.isinf(b):
        return b
    raise TypeError(f"not a bound: {b!r}")
