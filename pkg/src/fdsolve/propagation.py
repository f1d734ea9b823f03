"""Propagation chains: per-variable lists of suspended goals keyed by event."""

from enum import IntEnum

from .errors import ContractError


class ChainType(IntEnum):
    DOM = 0
    MIN = 1
    MAX = 2
    VAL = 3


DOM, MIN, MAX, VAL = ChainType.DOM, ChainType.MIN, ChainType.MAX, ChainType.VAL

# Event bitmask flags, one bit per chain type.
EV_DOM = 1 << DOM
EV_MIN = 1 << MIN
EV_MAX = 1 << MAX
EV_VAL = 1 << VAL


class Propagator:
    """A goal with pre-bound arguments, woken as ``fn(store, *args)``.

    ``fn`` returns a true value on success and a false one on failure.
    """

    __slots__ = ("id", "fn", "args", "name")

    def __init__(self, id, fn, args=(), name=None):
        self.id = id
        self.fn = fn
        self.args = args
        self.name = name or getattr(fn, "__name__", "goal")

    def __call__(self, store):
        return self.fn(store, *self.args)

    def __repr__(self):
        return f"<Propagator #{self.id} {self.name}>"


def _undo_add(chain, ids):
    ids.discard(chain.pop().id)


class PChains:
    """Four named chains.  Chains only grow; undo truncates them."""

    __slots__ = ("chains", "ids")

    def __init__(self):
        self.chains = ([], [], [], [])
        self.ids = (set(), set(), set(), set())

    def add(self, c, g, trail=None):
        ids = self.ids[c]
        if g.id in ids:
            raise ContractError(f"propagator #{g.id} already on the {ChainType(c).name} chain")
        chain = self.chains[c]
        chain.append(g)
        ids.add(g.id)
        if trail is not None:
            trail.append((_undo_add, chain, ids))

    def get(self, c):
        return list(self.chains[c])

    def __len__(self):
        return sum(len(c) for c in self.chains)

    def execute(self, c, store):
        """Run the goals present on chain *c* when the call starts, in order.

        Stops at, and reports, the first failing goal.  Goals appended while
        the chain runs wait for the next wake-up.
        """
        chain = self.chains[c]
        n = len(chain)
        if not n:
            return True
        counts = store.stats.executions
        for i in range(n):
            counts[c] += 1
            if not chain[i](store):
                return False
        return True

    def snapshot(self):
        return tuple(tuple(g.id for g in chain) for chain in self.chains)


def pchains_empty():
    return PChains()


def event_mask(old, new):
    """Event flags for a change from *old* to *new* (``new`` a subset of ``old``)."""
    if new is old or new == old:
        return 0
    ev = EV_DOM
    if new.min() != old.min():
        ev |= EV_MIN
    if new.max() != old.max():
        ev |= EV_MAX
    if new.is_singleton() and not old.is_singleton():
        ev |= EV_VAL
    return ev


def events_from(old, new):
    """The set of :class:`ChainType` events triggered by shrinking *old* to *new*."""
    ev = event_mask(old, new)
    return frozenset(c for c in ChainType if ev & (1 << c))
