"""One randomized check per range operation, shared by unit and acceptance tests.

Each checker draws inputs from subsets of [0, 63], runs the operation on a
range of the given kind and compares with the set oracle.
"""

import math

from fdsolve.errors import ContractError
from fdsolve.ranges import Bits, Open, validate

from oracles import as_set, clip, expected_complement, random_subset, runs, to_range, universe_of


def _same(r, expected):
    """*r* (range or None) denotes *expected* (a set; empty means failure)."""
    if not expected:
        assert r is None, f"expected failure, got {r}"
        return
    assert r is not None, f"unexpected failure, expected {sorted(expected)}"
    validate(r)
    assert r.intervals() == runs(expected), f"{r} != {runs(expected)}"


def check_interval(kind, rng):
    lo, hi = rng.randint(-5, 70), rng.randint(-5, 70)
    _same(kind.interval(lo, hi), clip(kind, range(lo, hi + 1)))


def check_singleton(kind, rng):
    v = rng.randint(-3, 66)
    _same(kind.singleton(v), clip(kind, {v}))


def check_union(kind, rng):
    a, b = random_subset(rng), random_subset(rng)
    _same(to_range(kind, a).union(to_range(kind, b)), a | b)


def check_intersect(kind, rng):
    a, b = random_subset(rng), random_subset(rng)
    _same(to_range(kind, a).intersect(to_range(kind, b)), a & b)


def check_complement(kind, rng):
    a = random_subset(rng)
    r = to_range(kind, a).complement()
    expected = expected_complement(kind, a)
    if not expected:
        assert r is None
        return
    validate(r)
    assert r.intervals() == expected


def check_add(kind, rng):
    a, n = random_subset(rng), rng.randint(-70, 70)
    _same(to_range(kind, a).add(n), clip(kind, {x + n for x in a}))


def check_sub(kind, rng):
    a, n = random_subset(rng), rng.randint(-70, 70)
    _same(to_range(kind, a).sub(n), clip(kind, {x - n for x in a}))


def check_mul(kind, rng):
    a, n = random_subset(rng), rng.randint(-4, 4)
    _same(to_range(kind, a).mul(n), clip(kind, {x * n for x in a}))


def check_is_singleton(kind, rng):
    a = random_subset(rng) if rng.random() < 0.5 else {rng.randint(0, 63)}
    assert to_range(kind, a).is_singleton() == (len(a) == 1)


def check_singleton_value(kind, rng):
    a = random_subset(rng)
    r = to_range(kind, a)
    if len(a) == 1:
        assert r.singleton_value() == next(iter(a))
    else:
        try:
            r.singleton_value()
        except ContractError:
            pass
        else:
            raise AssertionError("singleton_value accepted a non-singleton")


def check_size(kind, rng):
    a = random_subset(rng)
    assert to_range(kind, a).size() == len(a)


def check_get_domain(kind, rng):
    a = random_subset(rng)
    assert to_range(kind, a).get_domain() == sorted(a)


def check_enum(kind, rng):
    a = random_subset(rng)
    assert list(to_range(kind, a).enum()) == sorted(a)


def check_min(kind, rng):
    a = random_subset(rng)
    assert to_range(kind, a).min() == min(a)


def check_max(kind, rng):
    a = random_subset(rng)
    assert to_range(kind, a).max() == max(a)


def check_remove(kind, rng):
    a, v = random_subset(rng), rng.randint(-2, 65)
    _same(to_range(kind, a).remove(v), a - {v})


def check_contains(kind, rng):
    a, v = random_subset(rng), rng.randint(-2, 65)
    assert to_range(kind, a).contains(v) == (v in a)


def check_bound_const(kind, rng):
    if isinstance(kind, Open):
        assert kind.bound_const("inf") == -math.inf and kind.bound_const("sup") == math.inf
    else:
        assert (kind.bound_const("inf"), kind.bound_const("sup")) == universe_of(kind)
        assert as_set(kind.universe()) == set(range(universe_of(kind)[0], universe_of(kind)[1] + 1))
    if isinstance(kind, Bits):
        assert kind.bound_const("sup") == kind.size - 1


RANGE_OPS = {
    "interval": check_interval,
    "singleton": check_singleton,
    "union": check_union,
    "intersect": check_intersect,
    "complement": check_complement,
    "pointwise_add": check_add,
    "pointwise_sub": check_sub,
    "pointwise_mul": check_mul,
    "is_singleton": check_is_singleton,
    "singleton_to_bound": check_singleton_value,
    "size": check_size,
    "get_domain": check_get_domain,
    "enum": check_enum,
    "range_min": check_min,
    "range_max": check_max,
    "remove": check_remove,
    "contains": check_contains,
    "bound_const": check_bound_const,
}
