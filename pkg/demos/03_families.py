"""Labeled families: generalized Petersen graphs and grids of any shape.

Every family labeler dispatches on the parameters, produces a labeling
plus a certificate naming the argument used, and re-verifies before
returning.
"""

from collections import Counter

from nplab import (
    export_dot,
    gen_generalized_petersen,
    gen_grid,
    is_neighborhood_prime,
    label_gp,
    label_grid,
    label_grid3,
)

# %% All generalized Petersen graphs take a labeling; the route varies.
routes = Counter()
for n in range(3, 15):
    for k in range(1, n // 2 + 1):
        cert = label_gp(n, k)
        assert is_neighborhood_prime(gen_generalized_petersen(n, k), cert.labeling)
        routes[cert.reason] += 1
print("GP(n,k) for n <= 14, by certificate:")
for reason, count in routes.most_common():
    print(f"  {reason}: {count}")

# %% The non-Hamiltonian inner-half family has a closed-form labeling.
cert = label_gp(8, 4)
print("\nGP(8,4) outer ring:", cert.labeling.values[:8])
print("GP(8,4) inner pairs:", cert.labeling.values[8:])

# %% Grids of every shape, all four parity regimes.
for m, n in [(4, 5), (3, 6), (5, 5), (5, 7)]:
    cert = label_grid(m, n)
    print(f"\n{m} x {n} grid via {cert.reason}:")
    for r in range(m):
        row = [cert.labeling.of(r * n + c) for c in range(n)]
        print("   " + " ".join(f"{x:3d}" for x in row))

# %% Three dimensions, when the order is divisible by 4.
cert = label_grid3(2, 3, 4)
print("\n2 x 3 x 4 grid:", cert.verdict, "via", cert.reason)

# %% DOT output for the figures.
g = gen_grid([3, 3])
doc = export_dot(g, label_grid(3, 3).labeling)
print("\nDOT preview:")
print("\n".join(doc.splitlines()[:5]) + "\n  ...")
