"""Show what the model compiler posts for a few arithmetic relations."""

from fdsolve.model import Model, ModelVar, Predicate, linearize

A, B, C, D, E, X, Y = (ModelVar(n) for n in "ABCDEXY")

for r in (A == B + C + D + E, X != Y + 3, X == 2 + 3, A == B - C, 3 * X <= Y + 1, X < X):
    print(f"{r!s:<22}", "  ".join(str(p) for p in linearize(r)) or "(nothing)")

# compiled once with I unknown, so the offsets stay variable arguments
diff = Predicate(("X", "Y", "I"), lambda x, y, i: [x != y, x != y + i, x + i != y])
print("diff(X, Y, I):", "  ".join(str(p) for p in diff.posts))

m = Model()
x, y, z = m.vars(3, 0, 9)
m.post(x + 2 * y == z, x > y)
best = m.maximize(z - x)
print("maximize z - x:", best.value, "at", best.solution, f"({best.restarts} restarts)")
