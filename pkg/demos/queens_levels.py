"""Time the four glass-box versions of the queens diff constraint.

    python3 demos/queens_levels.py [N] [step|ff] [closed|open|bits]
"""

import sys

from fdsolve.queens import LEVELS, queens_bench
from fdsolve.ranges import make_kind


def main(argv):
    n = int(argv[0]) if argv else 16
    label = argv[1] if len(argv) > 1 else "step"
    kind = argv[2] if len(argv) > 2 else "bits"
    print(f"n={n} label={label} range={kind}, median of 3 runs")
    for level in LEVELS:
        r = queens_bench(n, label, level, make_kind(kind), repeats=3)
        print(f"  {level:<7} {r.seconds:8.4f}s  propagations={r.stats['propagations']:<7} {r.solution[:8]}...")


if __name__ == "__main__":
    main(sys.argv[1:])
