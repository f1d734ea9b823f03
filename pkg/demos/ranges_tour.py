"""The three range representations side by side."""

from fdsolve.ranges import Bits, Closed, Open

for kind in (Closed(0, 31), Open(), Bits(32)):
    a = kind.interval(2, 9).union(kind.interval(20, 22))
    b = kind.interval(5, 25).remove(7)
    print(type(kind).__name__)
    print("  a          ", a)
    print("  a /\\ b     ", a.intersect(b))
    print("  -a         ", a.complement())
    print("  a + 10     ", a.add(10))
    print("  a * 2      ", a.mul(2))
