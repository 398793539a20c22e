"""Prime labelings of star forests, and lobsters labeled by lifting.

A prime labeling (adjacent labels coprime) of any neighborhood graph of G
lifts to a neighborhood-prime labeling of G. For a reduced lobster there
is a neighborhood graph that is a union of stars, and star forests take
prime labelings from consecutive blocks: each block of at most 16 labels
contains one value coprime to all the others, which goes on the center.
"""

from nplab import (
    LobsterSpec,
    extend_with_pendants,
    gen_lobster,
    is_neighborhood_prime,
    is_prime_labeling,
    label_lobster_surplus,
    label_reduced_lobster,
    label_union_of_stars,
    pillai_select,
    Interval,
)

# %% The coprime pick inside short runs of consecutive integers.
for start, length in [(1, 16), (8, 8), (26, 6), (2184, 17)]:
    pick = pillai_select(Interval(start, length))
    print(f"[{start}..{start + length - 1}]: pick {pick}")

# %% A union of stars, largest first: 38 vertices, blocks of consecutive
# labels, centers on the coprime picks.
res = label_union_of_stars([15, 8, 5, 4, 1])
print("\nstar blocks:")
for blk in res.blocks:
    print(f"  {len(blk.leaves):2d} leaves <- labels "
          f"[{blk.interval.start}..{blk.interval.stop - 1}], "
          f"center {blk.center_label}")
print("prime:", bool(is_prime_labeling(res.graph, res.labeling)))

# %% A reduced lobster: spine of 6, interior degrees 17, 9, 6, 5.
spec = LobsterSpec([[], [1] * 15, [1] * 7, [1] * 4, [1] * 3, []])
g = gen_lobster(spec)
cert = label_reduced_lobster(spec)
print(f"\nreduced lobster: {g.n} vertices, {cert.verdict} via {cert.reason}")
print("star sizes used:", cert.params["star_sizes"])

# %% Lobsters with enough surplus vertices take a direct construction:
# alternating labels on the spine, then rounds of a coprime bijection
# guard one pendant per middle vertex.
spec = LobsterSpec([[], [2, 1], [1], [3], []])
cert = label_lobster_surplus(spec)
print("\nsurplus lobster:", cert.verdict, "via", cert.reason)

# %% Pendants on busy vertices never hurt.
g2, cert2 = extend_with_pendants(g, label_reduced_lobster(
    LobsterSpec([[], [1] * 15, [1] * 7, [1] * 4, [1] * 3, []])),
    [(1, 4), (2, 2)])
print("\nafter pendants:", g2.n, "vertices ->",
      bool(is_neighborhood_prime(g2, cert2.labeling)))
