"""Random relation and optimisation drivers checked against enumeration."""

import itertools

from fdsolve.model import Model, Rel
from fdsolve.modelfile import to_expr

from oracles import RELOPS, eval_node, random_linear, random_subset


def random_relation(rng, nvars=4):
    names = [f"v{i}" for i in range(rng.randint(1, nvars))]
    lhs = random_linear(rng, names)
    rhs = random_linear(rng, names, max_terms=2)
    op = rng.choice(list(RELOPS))
    domains = {n: sorted(random_subset(rng, 0, 5)) for n in names}
    return names, domains, op, lhs, rhs


def brute_relation(names, domains, op, lhs, rhs):
    out = []
    for values in itertools.product(*(domains[n] for n in names)):
        env = dict(zip(names, values))
        if RELOPS[op](eval_node(lhs, env), eval_node(rhs, env)):
            out.append(values)
    return out


def solve_relation(kind, names, domains, op, lhs, rhs):
    m = Model(kind)
    env = {n: m.var(0, 5, n) for n in names}
    for n in names:
        for v in range(0, 6):
            if v not in domains[n]:
                m.post(env[n] != v)
    m.post(Rel(op, to_expr(lhs, env), to_expr(rhs, env)))
    return [tuple(s) for s in m.solutions([env[n] for n in names])]


def relation_mismatch(kind, rng):
    """``None`` if a random relation is solved exactly, else a description."""
    names, domains, op, lhs, rhs = random_relation(rng)
    want = brute_relation(names, domains, op, lhs, rhs)
    got = solve_relation(kind, names, domains, op, lhs, rhs)
    if got != want:
        return f"{lhs} {op} {rhs} over {domains}: got {got}, want {want}"
    return None


def random_optimisation(rng):
    names = [f"v{i}" for i in range(rng.randint(1, 3))]
    domains = {}
    for n in names:
        lo = rng.randint(0, 9)
        domains[n] = (lo, rng.randint(lo, 9))
    constraints = []
    for _ in range(rng.randint(0, 2)):
        constraints.append((rng.choice(list(RELOPS)), random_linear(rng, names, 3, 2, 9),
                            random_linear(rng, names, 2, 2, 9)))
    objective = random_linear(rng, names, 3, 3, 5)
    sense = rng.choice(["min", "max"])
    return names, domains, constraints, objective, sense


def brute_optimum(names, domains, constraints, objective, sense):
    best = None
    for values in itertools.product(*(range(domains[n][0], domains[n][1] + 1) for n in names)):
        env = dict(zip(names, values))
        if all(RELOPS[op](eval_node(a, env), eval_node(b, env)) for op, a, b in constraints):
            v = eval_node(objective, env)
            if best is None or (v < best if sense == "min" else v > best):
                best = v
    return best


def solve_optimisation(kind, names, domains, constraints, objective, sense):
    m = Model(kind)
    env = {n: m.var(domains[n][0], domains[n][1], n) for n in names}
    for op, a, b in constraints:
        m.post(Rel(op, to_expr(a, env), to_expr(b, env)))
    opt = m.minimize(to_expr(objective, env), [env[n] for n in names], maximize=sense == "max")
    return m, env, opt


def optimisation_mismatch(kind, rng):
    """``None`` if the optimum and the restart count are right, else a description."""
    problem = random_optimisation(rng)
    names, domains, constraints, objective, sense = problem
    want = brute_optimum(*problem)
    m, env, opt = solve_optimisation(kind, *problem)
    if want is None:
        return None if opt is None else f"{problem}: expected unsat, got {opt.value}"
    if opt is None or opt.value != want:
        return f"{problem}: got {None if opt is None else opt.value}, want {want}"
    if opt.restarts != opt.improvements:
        return f"{problem}: {opt.restarts} restarts for {opt.improvements} improvements"
    values = dict(zip(names, opt.solution.values))
    if eval_node(objective, values) != want:
        return f"{problem}: returned solution {values} does not reach {want}"
    return None
