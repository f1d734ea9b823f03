"""Brute-force meaning of every library constraint and a ground checker."""

import itertools

from fdsolve.constraints import CONSTRAINTS
from fdsolve.fdvar import VarStore
from fdsolve.ranges import Closed

MEANING = {
    "a=b": lambda a, b: a == b,
    "a=t": lambda a, t: a == t,
    "a<>b": lambda a, b: a != b,
    "a<>t": lambda a, t: a != t,
    "a<>b+t": lambda a, b, t: a != b + t,
    "a+b<>c": lambda a, b, c: a + b != c,
    "a=b+t": lambda a, b, t: a == b + t,
    "a=b+c": lambda a, b, c: a == b + c,
    "a+b=c": lambda a, b, c: a + b == c,
    "a+t=c": lambda a, t, c: a + t == c,
    "a<b": lambda a, b: a < b,
    "a<=b": lambda a, b: a <= b,
    "a<=b+t": lambda a, b, t: a <= b + t,
    "a<t": lambda a, t: a < t,
    "a<=t": lambda a, t: a <= t,
    "a>t": lambda a, t: a > t,
    "a>=t": lambda a, t: a >= t,
    "t<a": lambda t, a: t < a,
    "t<=a": lambda t, a: t <= a,
    "a<>b/kernel": lambda a, b: a != b,
    "a<>b+t/kernel": lambda a, b, t: a != b + t,
}


def arg_letters(name):
    return [ch for ch in name.split("/")[0] if ch.isalpha()]


def const_positions(name):
    return [i for i, ch in enumerate(arg_letters(name)) if ch == "t"]


def ground_accepts(name, values, tell_first, kind=None):
    """Post *name* with variables fixed to *values* (ints at ``t`` positions)."""
    store = VarStore(kind or Closed(-20, 40))
    consts = const_positions(name)
    args, fixes = [], []
    for i, v in enumerate(values):
        if i in consts:
            args.append(v)
        else:
            x = store.new_var()
            args.append(x)
            fixes.append((x, v))
    if tell_first:
        if not all(store.tell_value(x, v) for x, v in fixes):
            return False
        return bool(CONSTRAINTS[name](store, *args))
    if not CONSTRAINTS[name](store, *args):
        return False
    return all(store.tell_value(x, v) for x, v in fixes)


def ground_mismatches(name, lo=0, hi=6):
    """Tuples of ``lo..hi`` where the constraint disagrees with its meaning."""
    meaning = MEANING[name]
    arity = len(arg_letters(name))
    bad = []
    for values in itertools.product(range(lo, hi + 1), repeat=arity):
        want = meaning(*values)
        for tell_first in (False, True):
            if ground_accepts(name, values, tell_first) != want:
                bad.append((values, tell_first))
    return bad
