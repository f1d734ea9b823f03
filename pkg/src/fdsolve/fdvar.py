"""FD variables, the tell/prune kernel and the undo trail.

An FD term is either an :class:`FdVar` owned by a :class:`VarStore` or a
plain ``int``.  Integers answer range queries as singletons and ignore
propagator registration.

Every in-place write (range, chain append, variable creation, attributes set
through :meth:`VarStore.trail_setattr`) pushes an undo entry; ``undo_to``
replays them backwards, which is how search backtracks.
"""

from dataclasses import dataclass, field, fields

from .errors import ContractError
from .propagation import DOM, MAX, MIN, VAL, ChainType, PChains, Propagator
from .ranges import Closed


class FdVar:
    __slots__ = ("index", "range", "chains", "name", "alive")

    def __init__(self, index, rng, name=None):
        self.index = index
        self.range = rng
        self.chains = PChains()
        self.name = name
        self.alive = True

    def __repr__(self):
        label = self.name or f"_{self.index}"
        return f"{label}{self.range}"


def is_var(t):
    return t.__class__ is FdVar


@dataclass
class Stats:
    tells: int = 0
    prunes: int = 0
    noop_tells: int = 0
    tell_writes: int = 0
    tell_failures: int = 0
    prune_writes: int = 0
    failures: int = 0
    executions: list = field(default_factory=lambda: [0, 0, 0, 0])
    trail_peak: int = 0
    nodes: int = 0
    backtracks: int = 0
    solutions: int = 0
    restarts: int = 0

    def as_dict(self):
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "executions":
                for c in ChainType:
                    out[f"exec_{c.name.lower()}"] = value[c]
                out["propagations"] = sum(value)
            else:
                out[f.name] = value
        return out


class ChoiceMark:
    __slots__ = ("pos", "depth")

    def __init__(self, pos, depth):
        self.pos = pos
        self.depth = depth

    def __repr__(self):
        return f"<ChoiceMark trail={self.pos} depth={self.depth}>"


def _restore_range(var, old):
    var.range = old


def _restore_attr(obj, pair):
    setattr(obj, pair[0], pair[1])


def _drop_var(store, var):
    store.vars.pop()
    var.alive = False


class VarStore:
    """Arena of FD variables plus the trail that undoes their updates.

    A store is single-threaded; independent stores share nothing.
    """

    def __init__(self, kind=None):
        self.kind = kind if kind is not None else Closed()
        self.vars = []
        self.trail = []
        self._marks = []
        self._next_id = 0
        self.stats = Stats()

    # -- variables ---------------------------------------------------------

    def new_var(self, name=None, rng=None):
        var = FdVar(len(self.vars), rng if rng is not None else self.kind.universe(), name)
        self.vars.append(var)
        self.trail.append((_drop_var, self, var))
        return var

    def new_vars(self, n, prefix="x"):
        return [self.new_var(f"{prefix}{i}") for i in range(n)]

    def get_range(self, t):
        if t.__class__ is int:
            return self.kind.singleton(t)
        return t.range

    def integerize(self, t):
        if t.__class__ is int:
            return t
        r = t.range
        if not r.is_singleton():
            raise ContractError(f"{t!r} is not instantiated")
        return r.singleton_value()

    def value(self, t):
        """The value of *t* if it is fixed, else ``None``."""
        if t.__class__ is int:
            return t
        r = t.range
        return r.singleton_value() if r.is_singleton() else None

    # -- propagators ---------------------------------------------------------

    def propagator(self, fn, *args, name=None):
        self._next_id += 1
        return Propagator(self._next_id, fn, args, name)

    def add_propag(self, t, c, g):
        if t.__class__ is int:
            return
        t.chains.add(c, g, self.trail)

    # -- kernel operations -----------------------------------------------------

    def tell_range(self, t, r):
        """Intersect the range of *t* with *r* and wake the affected chains.

        Returns ``False`` when the intersection is empty or a woken
        propagator fails.
        """
        stats = self.stats
        stats.tells += 1
        if t.__class__ is int:
            if r.contains(t):
                stats.noop_tells += 1
                return True
            stats.tell_failures += 1
            stats.failures += 1
            return False
        old = t.range
        new = old.intersect(r)
        if new is None:
            stats.tell_failures += 1
            stats.failures += 1
            return False
        if new is old or new == old:
            stats.noop_tells += 1
            return True
        stats.tell_writes += 1
        return self._update(t, old, new)

    def tell_value(self, t, value):
        r = self.kind.singleton(value)
        if r is None:
            self.stats.tells += 1
            self.stats.tell_failures += 1
            self.stats.failures += 1
            return False
        return self.tell_range(t, r)

    def tell_interval(self, t, lo, hi):
        r = self.kind.interval(lo, hi)
        if r is None:
            self.stats.tells += 1
            self.stats.tell_failures += 1
            self.stats.failures += 1
            return False
        return self.tell_range(t, r)

    def prune(self, t, value):
        """Remove *value* from the range of *t*."""
        stats = self.stats
        stats.prunes += 1
        if t.__class__ is int:
            if t == value:
                stats.failures += 1
                return False
            return True
        old = t.range
        new = old.remove(value)
        if new is old:
            return True
        if new is None:
            stats.failures += 1
            return False
        stats.prune_writes += 1
        return self._update(t, old, new)

    def _update(self, var, old, new):
        self.trail.append((_restore_range, var, old))
        var.range = new
        chains = var.chains
        lists = chains.chains
        if lists[VAL] and new.is_singleton():
            if not chains.execute(VAL, self):
                return False
        if lists[MIN] and new.min() != old.min():
            if not chains.execute(MIN, self):
                return False
        if lists[MAX] and new.max() != old.max():
            if not chains.execute(MAX, self):
                return False
        if lists[DOM]:
            return chains.execute(DOM, self)
        return True

    # -- trail -------------------------------------------------------------------

    def trail_setattr(self, obj, name, value):
        """Set ``obj.name = value`` so that backtracking restores the old value."""
        self.trail.append((_restore_attr, obj, (name, getattr(obj, name))))
        setattr(obj, name, value)

    def mark(self):
        m = ChoiceMark(len(self.trail), len(self._marks))
        self._marks.append(m)
        return m

    def undo_to(self, m):
        marks = self._marks
        if m.depth >= len(marks) or marks[m.depth] is not m:
            raise ContractError(f"stale choice mark {m!r}")
        del marks[m.depth + 1:]
        trail = self.trail
        n = len(trail)
        if n > self.stats.trail_peak:
            self.stats.trail_peak = n
        pop = trail.pop
        for _ in range(n - m.pos):
            fn, a, b = pop()
            fn(a, b)

    def release(self, m):
        """Forget *m* (and every later mark) without undoing anything."""
        marks = self._marks
        if m.depth < len(marks) and marks[m.depth] is m:
            del marks[m.depth:]

    def trail_depth(self):
        return len(self.trail)

    def peak_trail(self):
        return max(self.stats.trail_peak, len(self.trail))

    def snapshot(self):
        """Comparable image of every live variable (range and chain contents)."""
        return tuple((v.index, v.range, v.chains.snapshot()) for v in self.vars)
