"""Queens checks shared by the unit tests and the acceptance suite."""

from fdsolve.queens import LEVELS, queens_bench, queens_solutions
from fdsolve.ranges import make_kind

from oracles import queens_brute

KIND_NAMES = ("closed", "open", "bits")


def queens_disagreements(ns=range(4, 10), label="step"):
    """Every (n, level, kind) whose solution sequence differs from brute force.

    Brute force enumerates permutations in lexicographic order, which is also
    the order of step labeling, so whole sequences can be compared.
    """
    bad = []
    for n in ns:
        want = queens_brute(n)
        for kind in KIND_NAMES:
            for level in LEVELS:
                got = [list(s) for s in queens_solutions(n, level, make_kind(kind), label)]
                if got != want:
                    bad.append((n, level, kind, len(got), len(want)))
    return bad


def bench_rows(n, label, kind, repeats=5):
    """Median first-solution times per level, plus the solutions found."""
    rows = {}
    for level in LEVELS:
        rows[level] = queens_bench(n, label, level, make_kind(kind), repeats)
    return rows


def ordering_holds(rows, separation=0.10):
    """kernel <= idx <= fd <= clpfd, with kernel at least *separation* below clpfd."""
    t = [rows[level].seconds for level in ("kernel", "idx", "fd", "clpfd")]
    ordered = all(a <= b for a, b in zip(t, t[1:]))
    return ordered and t[0] <= (1 - separation) * t[-1]
