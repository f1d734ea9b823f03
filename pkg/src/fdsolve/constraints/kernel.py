"""Constraints written directly against the kernel (no indexical compiler).

These wake on the ``val`` chain and remove single values with ``prune``.
"""

from ..propagation import VAL


def _prune_offset(store, x, y, offset):
    # y is fixed: x must differ from y + offset
    return store.prune(x, store.integerize(y) + offset)


def _watch_val(store, watched, fn, *args):
    g = store.propagator(fn, *args)
    store.add_propag(watched, VAL, g)
    return g


def _ready(store, t):
    return store.value(t) is not None


def neq_offset(store, a, b, n=0):
    """``a != b + n`` via val-triggered prunes."""
    g1 = _watch_val(store, b, _prune_offset, a, b, n)
    g2 = _watch_val(store, a, _prune_offset, b, a, -n)
    if _ready(store, b) and not g1(store):
        return False
    if _ready(store, a) and not g2(store):
        return False
    return True


def neq(store, a, b):
    return neq_offset(store, a, b, 0)
