"""Independent from-definition oracles used to check the library.

Everything here is deliberately naive and shares no code with the package
beyond the Graph accessors: enumerations over all permutations, direct gcd
folds, bitmask dynamic programming for Hamiltonicity.
"""

from itertools import permutations
from math import gcd

from nplab.graphs import Graph


def naive_is_npl(g: Graph, labels) -> bool:
    labels = list(labels)
    for v in range(g.n):
        nbrs = [w for w in range(g.n) if g.has_edge(v, w)]
        if len(nbrs) <= 1:
            continue
        acc = 0
        for w in nbrs:
            acc = gcd(acc, labels[w])
        if acc != 1:
            return False
    return True


def naive_is_prime(g: Graph, labels) -> bool:
    labels = list(labels)
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if g.has_edge(u, w) and gcd(labels[u], labels[w]) != 1:
                return False
    return True


def npl_by_enumeration(g: Graph) -> bool:
    """Try every one of the n! labelings."""
    for perm in permutations(range(1, g.n + 1)):
        if naive_is_npl(g, perm):
            return True
    return False


def prime_by_enumeration(g: Graph) -> bool:
    for perm in permutations(range(1, g.n + 1)):
        if naive_is_prime(g, perm):
            return True
    return False


def hamiltonian_by_dp(g: Graph) -> bool:
    """Held-Karp style reachability: is there a spanning cycle?"""
    n = g.n
    if n < 3:
        return False
    adj = g.adj
    full = (1 << n) - 1
    # paths start at vertex 0; dp[mask] = bitmask of possible endpoints
    dp = [0] * (1 << n)
    dp[1] = 1
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        ends = dp[mask]
        if not ends:
            continue
        e = ends
        while e:
            low = e & -e
            e ^= low
            v = low.bit_length() - 1
            nxt = adj[v] & ~mask
            while nxt:
                nl = nxt & -nxt
                nxt ^= nl
                w = nl.bit_length() - 1
                dp[mask | nl] |= nl
        if mask == full and ends & adj[0]:
            return True
    return bool(dp[full] & adj[0])


def coprime_pairs_ok(mapping: dict) -> bool:
    return all(gcd(i, v) == 1 for i, v in mapping.items())


def brute_pillai(start: int, length: int):
    """Smallest member coprime to all other members, by raw gcd checks."""
    xs = list(range(start, start + length))
    for x in xs:
        if all(gcd(x, y) == 1 for y in xs if y != x):
            return x
    return None
