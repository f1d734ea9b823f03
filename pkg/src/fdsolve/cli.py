"""Command line entry point ``fdsolve``.

::

    fdsolve MODEL [--range closed|open|bits] [--label step|ff] [--all|--first] [--stats]
    fdsolve queens N [--level clpfd|fd|idx|kernel] [--range ...] [--label ...]
                     [--all|--first] [--bench [--repeats K]] [--stats]

Solutions go to standard output, one ``[v1,v2,...]`` per line.  Statistics
go to standard error as ``key=value`` lines.  Exit status: 0 solved,
1 unsatisfiable, 2 usage or parse error, 3 internal contract error.
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

from .errors import ContractError, FdError, FdSyntaxError, UnsupportedConstraint
from .modelfile import parse_model
from .queens import LEVELS, queens_bench, queens_model
from .ranges import make_kind
from .search import labeling

EXIT_SOLVED, EXIT_UNSAT, EXIT_USAGE, EXIT_CONTRACT = 0, 1, 2, 3


@dataclass
class RunConfig:
    range_kind: str = "closed"
    label_mode: str = "step"
    level: str = "clpfd"
    first_only: bool = False


@dataclass
class RunResult:
    solutions: list
    stats: dict
    seconds: float
    objective: int = None
    extra: dict = field(default_factory=dict)

    @property
    def status(self):
        return EXIT_SOLVED if self.solutions else EXIT_UNSAT


def _check_domains(mf, kind):
    lo, hi = kind.bound_const("inf"), kind.bound_const("sup")
    for d in mf.decls:
        if d.lo < lo or d.hi > hi:
            raise FdSyntaxError(
                f"domain of {d.name} ({d.lo}..{d.hi}) is outside the universe {lo}..{hi}; "
                "set FD_DEFAULT_UNIVERSE or use --range open", d.line, 1, mf.source)


def run(mf, config=None):
    """Solve a parsed model file.  Generic models always go through the model compiler."""
    config = config or RunConfig()
    kind = make_kind(config.range_kind)
    _check_domains(mf, kind)
    t0 = time.perf_counter()
    m, env, objective = mf.build(kind)
    variables = [env[n] for n in mf.names]
    solutions, value, extra = [], None, {}
    if mf.goal == "satisfy":
        for sol in m.solutions(variables, config.label_mode):
            solutions.append(list(sol))
            if config.first_only:
                break
    else:
        opt = m.minimize(objective, variables, config.label_mode, maximize=mf.goal == "maximize")
        if opt is not None:
            solutions.append(list(opt.solution))
            value = opt.value
            extra = {"improvements": opt.improvements}
    seconds = time.perf_counter() - t0
    return RunResult(solutions, m.store.stats.as_dict(), seconds, value, extra)


def run_queens(n, config=None):
    config = config or RunConfig(level="fd")
    kind = make_kind(config.range_kind)
    t0 = time.perf_counter()
    built = queens_model(n, config.level, kind)
    solutions, stats = [], {}
    if built is not None:
        store, terms = built
        for sol in labeling(store, terms, config.label_mode):
            solutions.append(list(sol))
            if config.first_only:
                break
        stats = store.stats.as_dict()
    return RunResult(solutions, stats, time.perf_counter() - t0)


def _format(sol):
    return "[" + ",".join(map(str, sol)) + "]"


def _emit_stats(result, out):
    for key, value in result.stats.items():
        print(f"{key}={value}", file=out)
    for key, value in result.extra.items():
        print(f"{key}={value}", file=out)
    print(f"time={result.seconds:.6f}", file=out)


def _common(p):
    p.add_argument("--range", dest="range_kind", choices=("closed", "open", "bits"),
                   default="closed", help="range representation (default: closed)")
    p.add_argument("--label", dest="label_mode", choices=("step", "ff"), default="step",
                   help="variable selection: leftmost or first-fail (default: step)")
    p.add_argument("--stats", action="store_true", help="print solver statistics to stderr")


def _model_parser():
    p = argparse.ArgumentParser(prog="fdsolve", description="Solve a finite-domain model file.",
                                epilog="Use 'fdsolve queens N ...' for the queens harness.")
    p.add_argument("model", help="model file")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", dest="first_only", action="store_false", help="all solutions (default)")
    g.add_argument("--first", dest="first_only", action="store_true", help="first solution only")
    p.set_defaults(first_only=False)
    return p


def _queens_parser():
    p = argparse.ArgumentParser(prog="fdsolve queens", description="N-queens harness.")
    p.add_argument("n", type=int, help="board size (at least 1)")
    p.add_argument("--level", choices=LEVELS, default="fd",
                   help="how the diff constraint is written (default: fd)")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", dest="first_only", action="store_false", help="all solutions")
    g.add_argument("--first", dest="first_only", action="store_true",
                   help="first solution only (default)")
    p.add_argument("--bench", action="store_true",
                   help="time first-solution search for every level and print a table")
    p.add_argument("--repeats", type=int, default=5, help="runs per level for --bench (median)")
    p.set_defaults(first_only=True)
    return p


def _bench(args, out, err):
    kind = make_kind(args.range_kind)
    print(f"queens n={args.n} label={args.label_mode} range={args.range_kind} "
          f"median of {args.repeats}", file=out)
    print(f"{'level':<8} {'seconds':>10} {'nodes':>8} {'propagations':>13}", file=out)
    status = EXIT_UNSAT
    for level in LEVELS:
        r = queens_bench(args.n, args.label_mode, level, kind, args.repeats)
        print(f"{level:<8} {r.seconds:>10.4f} {r.stats.get('nodes', 0):>8} "
              f"{r.stats.get('propagations', 0):>13}", file=out)
        if r.solution is not None:
            status = EXIT_SOLVED
    return status


def _main(argv, out, err):
    if argv and argv[0] == "queens":
        args = _queens_parser().parse_args(argv[1:])
        if args.n < 1 or args.repeats < 1:
            print("fdsolve queens: N and --repeats must be positive", file=err)
            return EXIT_USAGE
        if args.bench:
            return _bench(args, out, err)
        config = RunConfig(args.range_kind, args.label_mode, args.level, args.first_only)
        result = run_queens(args.n, config)
    else:
        args = _model_parser().parse_args(argv)
        try:
            mf = parse_model(args.model)
        except OSError as e:
            print(f"fdsolve: {e}", file=err)
            return EXIT_USAGE
        config = RunConfig(args.range_kind, args.label_mode, "clpfd", args.first_only)
        result = run(mf, config)
        if result.objective is not None:
            print(f"objective={result.objective}", file=err)
    for sol in result.solutions:
        print(_format(sol), file=out)
    if not result.solutions:
        print("unsatisfiable", file=err)
    if args.stats:
        _emit_stats(result, err)
    return result.status


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        return _main(argv, out, err)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except (FdSyntaxError, UnsupportedConstraint, ValueError) as e:
        print(f"fdsolve: {e}", file=err)
        return EXIT_USAGE
    except (ContractError, FdError) as e:
        print(f"fdsolve: {e}", file=err)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
