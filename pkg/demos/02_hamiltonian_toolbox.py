"""Spanning-cycle labelings and the chord repairs for order 2 mod 4.

The alternating cycle labels put consecutive values on the two cycle
neighbors of every position, which settles any Hamiltonian graph whose
order is not 2 mod 4. Orders 2 mod 4 fail at exactly one vertex, and a
single chord of the right shape repairs that neighborhood.
"""

from nplab import (
    Chord,
    HamiltonCycle,
    find_chord_4k,
    find_hamilton_cycle,
    find_odd_chord,
    gen_cycle,
    is_neighborhood_prime,
    label_circumference,
    label_cycle_standard,
    label_ham_chord_4k,
    label_ham_odd_chord,
    label_hamiltonian,
    Graph,
)

# %% The cycle law: alternating labels work exactly when n is not 2 mod 4.
for n in range(3, 11):
    ok = bool(is_neighborhood_prime(gen_cycle(n), label_cycle_standard(n)))
    print(f"C{n}: alternating labels {'work' if ok else 'fail'}")

# %% One chord saves C6: close a 4-cycle with three cycle edges...
g = gen_cycle(6).add_edges([(2, 5)])
cycle = HamiltonCycle(range(6))
cert = label_ham_chord_4k(g, cycle, Chord(2, 5))
print("\nC6 + chord (2,5):", cert.labeling.values, "->", cert.verdict)

# %% ...or close an odd cycle. Label 1 lands across the chord from the
# one failing vertex.
g = gen_cycle(6).add_edges([(0, 2)])
cert = label_ham_odd_chord(g, cycle, Chord(0, 2))
print("C6 + chord (0,2):", cert.labeling.values, "->", cert.verdict)

# %% Chord finders scan a given spanning cycle.
square = gen_cycle(8).add_edges([(0, 3)])
print("\nchord closing a 4k cycle in C8+(0,3):",
      find_chord_4k(square, HamiltonCycle(range(8))))
print("chord closing an odd cycle there:",
      find_odd_chord(square, HamiltonCycle(range(8))))

# %% Nearly-spanning cycles work too when the order is not 3 mod 4: the
# leftover vertex takes the top label next to the vertex labeled 1.
g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)])
cert = label_circumference(g, HamiltonCycle([0, 1, 2, 3]), 4)
print("\nsquare + pendant:", cert.labeling.values, "->", cert.verdict)

# %% The search proves non-Hamiltonicity definitively when it matters.
from nplab import gen_generalized_petersen

res = find_hamilton_cycle(gen_generalized_petersen(8, 4))
print("\nGP(8,4) spanning cycle search:", res.status)
