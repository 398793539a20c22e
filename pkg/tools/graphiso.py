"""Canonical forms for small graphs (corpus generation and test support).

Not part of the installed package: the library itself never canonicalizes,
it only consumes graph6 corpora. The canonical key is the minimum
upper-triangle bitstring over the leaves of a refinement/individualization
tree, which is exact (if slow) for the orders used here.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from nplab.graphs import Graph  # noqa: E402


def _refine(n: int, adj, part):
    while True:
        masks = []
        for cell in part:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for cell in part:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                key = tuple((adj[v] & m).bit_count() for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) > 1:
                changed = True
            for key in sorted(sig):
                out.append(sig[key])
        if not changed:
            return out
        part = out


def canon_key(g: Graph) -> tuple[int, int]:
    """(order, minimum adjacency bitstring) — equal iff isomorphic."""
    n = g.n
    adj = g.adj
    deg = g.degrees()
    groups = {}
    for v in range(n):
        groups.setdefault(-deg[v], []).append(v)
    part0 = [groups[k] for k in sorted(groups)]
    best = None

    def leaf_key(perm):
        bits = 0
        for j in range(1, n):
            pj = perm[j]
            for i in range(j):
                bits = bits << 1 | (adj[perm[i]] >> pj & 1)
        return bits

    def rec(part):
        nonlocal best
        part = _refine(n, adj, part)
        for ci, cell in enumerate(part):
            if len(cell) > 1:
                for v in sorted(cell):
                    rest = [w for w in cell if w != v]
                    rec(part[:ci] + [[v], rest] + part[ci + 1:])
                return
        key = leaf_key([c[0] for c in part])
        if best is None or key < best:
            best = key

    rec(part0)
    return n, best


def canon_graph(g: Graph) -> Graph:
    """Isomorph of g with canonically ordered vertices."""
    n, bits = canon_key(g)
    masks = [0] * n
    pos = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            pos -= 1
    m = sum(x.bit_count() for x in masks) // 2
    return Graph(n, tuple(masks), m)


def isomorphic(a: Graph, b: Graph) -> bool:
    return canon_key(a) == canon_key(b)
