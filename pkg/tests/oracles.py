"""Independent reference implementations used by the tests.

Nothing here imports solver internals beyond the public range constructors:
sets are plain Python sets, constraint problems are solved by enumeration.
"""

import itertools
import math
import random

from fdsolve.ranges import Bits, Closed, Open

WINDOW = (0, 63)

KINDS = {
    "closed": Closed(0, 63),
    "open": Open(),
    "bits": Bits(64),
}


def random_subset(rng, lo=0, hi=63):
    """A non-empty subset of lo..hi, biased towards runs so intervals appear."""
    style = rng.random()
    if style < 0.3:
        return {rng.randint(lo, hi)} if rng.random() < 0.3 else set(
            rng.sample(range(lo, hi + 1), rng.randint(1, min(12, hi - lo + 1))))
    out = set()
    for _ in range(rng.randint(1, 5)):
        a = rng.randint(lo, hi)
        b = min(hi, a + rng.randint(0, max(1, (hi - lo) // 3)))
        out.update(range(a, b + 1))
    if style > 0.9:
        out = set(range(lo, hi + 1)) - out or {lo}
    return out


def to_range(kind, values):
    return kind.from_values(sorted(values))


def as_set(r):
    return set(r.get_domain())


def runs(values):
    """Maximal runs of consecutive integers as ``[(lo, hi), ...]``."""
    out = []
    for v in sorted(values):
        if out and out[-1][1] == v - 1:
            out[-1] = (out[-1][0], v)
        else:
            out.append((v, v))
    return out


def universe_of(kind):
    if isinstance(kind, Open):
        return None
    return kind.bound_const("inf"), kind.bound_const("sup")


def clip(kind, values):
    """What a kind keeps of a set of integers (bits drops out-of-universe values)."""
    if isinstance(kind, Bits):
        return {v for v in values if 0 <= v < kind.size}
    return set(values)


def expected_complement(kind, values):
    """Complement as an interval list, with infinite ends for the open kind."""
    if isinstance(kind, Open):
        lo, hi = min(values) - 1, max(values) + 1
        ivs = runs(set(range(lo, hi + 1)) - set(values))
        ivs[0] = (-math.inf, ivs[0][1])
        ivs[-1] = (ivs[-1][0], math.inf)
        return ivs
    lo, hi = universe_of(kind)
    return runs(set(range(lo, hi + 1)) - set(values))


def brute_solutions(domains, pred):
    """Every tuple of the product of *domains* satisfying *pred*, in lexicographic order."""
    return [t for t in itertools.product(*domains) if pred(*t)]


def queens_brute(n):
    """All placements in lexicographic order (row of queen 1 first)."""
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        if all(abs(p[i] - p[j]) != j - i for i in range(n) for j in range(i + 1, n)):
            out.append(list(p))
    return out


RELOPS = {
    "#=": lambda a, b: a == b,
    "#\\=": lambda a, b: a != b,
    "#<": lambda a, b: a < b,
    "#=<": lambda a, b: a <= b,
    "#>": lambda a, b: a > b,
    "#>=": lambda a, b: a >= b,
}


def random_linear(rng, names, max_terms=4, max_coeff=3, max_const=6):
    """A random linear expression as a nested tuple over *names*."""
    node = _random_atom(rng, names, max_coeff, max_const)
    for _ in range(rng.randint(0, max_terms - 1)):
        op = rng.choice("+-")
        node = (op, node, _random_atom(rng, names, max_coeff, max_const))
    return node


def _random_atom(rng, names, max_coeff, max_const):
    r = rng.random()
    if r < 0.2:
        return ("int", rng.randint(-max_const, max_const))
    v = ("var", rng.choice(names))
    if r < 0.4:
        return ("*", ("int", rng.randint(-max_coeff, max_coeff)), v)
    if r < 0.5:
        return ("*", v, ("int", rng.randint(0, max_coeff)))
    return v


def eval_node(node, env):
    tag = node[0]
    if tag == "int":
        return node[1]
    if tag == "var":
        return env[node[1]]
    a, b = eval_node(node[1], env), eval_node(node[2], env)
    return {"+": a + b, "-": a - b, "*": a * b}[tag]


def node_vars(node):
    if node[0] == "var":
        return {node[1]}
    if node[0] == "int":
        return set()
    return node_vars(node[1]) | node_vars(node[2])


def seeded(seed):
    return random.Random(seed)
