"""A first tour: what a neighborhood-prime labeling is, and how to get one.

A labeling assigns 1..n bijectively to the vertices. It is
neighborhood-prime when, at every vertex with at least two neighbors, the
labels seen across that neighborhood have greatest common divisor 1.
"""

from nplab import (
    Labeling,
    certify_sufficient,
    gen_complete,
    gen_cycle,
    gen_union,
    is_neighborhood_prime,
    label_cycle_standard,
    search_npl,
)

# %% Verify a labeling by hand.
c5 = gen_cycle(5)
good = Labeling([3, 1, 4, 2, 5])
print("C5 with (3,1,4,2,5):", bool(is_neighborhood_prime(c5, good)))

# Each neighborhood of the 5-cycle sees two consecutive labels (or the
# label 1), so every gcd is 1. Now a labeling that fails:
c6 = gen_cycle(6)
bad = label_cycle_standard(6)
check = is_neighborhood_prime(c6, bad)
print(f"C6 with {bad.values}: ok={check.ok}, "
      f"failing vertex {check.vertex} sees gcd {check.value}")

# %% The exhaustive search settles any small graph definitively.
print("\nsearch C5:", search_npl(c5).reason)
print("search C6:", search_npl(c6).reason)   # a proof that no labeling exists

# %% certify_sufficient chains the cheap arguments before searching.
for name, g in [
    ("K7", gen_complete(7)),
    ("C6", gen_cycle(6)),
    ("C3 + C3", gen_union([gen_cycle(3), gen_cycle(3)])),
    ("C4 + C3", gen_union([gen_cycle(4), gen_cycle(3)])),
]:
    cert = certify_sufficient(g)
    print(f"{name:>8}: {cert.verdict:8} via {cert.reason}")

# Every positive certificate carries a labeling that re-verifies:
cert = certify_sufficient(gen_complete(7))
assert is_neighborhood_prime(gen_complete(7), cert.labeling)
print("\nK7 labels:", cert.labeling.values)
