"""Exact decision procedures: Hamilton cycles, chords, exhaustive searches.

All searches are complete: a negative answer means the space was exhausted,
and budget exhaustion is reported as a distinct outcome, never conflated
with a definitive negative.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import gcd
from typing import Callable, Optional

from .graphs import Graph
from .labeling import Certificate, Labeling, R_SEARCH_EXHAUSTED, R_SEARCH_FOUND

R_BUDGET = "budget-exhausted"

FOUND = "found"
NONE = "none"
BUDGET = "budget"


class _Stop(Exception):
    pass


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a backtracking run; None means unlimited.

    ``cancel`` is an optional callable polled periodically so a caller can
    abort a long search cooperatively.
    """

    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    cancel: Optional[Callable[[], bool]] = None


class _Meter:
    __slots__ = ("nodes", "node_limit", "deadline", "cancel", "_mask")

    def __init__(self, budget: Optional[SearchBudget]):
        self.nodes = 0
        self.node_limit = budget.node_limit if budget else None
        self.deadline = (
            time.monotonic() + budget.time_limit
            if budget and budget.time_limit is not None
            else None
        )
        self.cancel = budget.cancel if budget else None
        self._mask = 0x3FF

    def tick(self):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Stop
        if self.nodes & self._mask == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise _Stop
            if self.cancel is not None and self.cancel():
                raise _Stop


@dataclass(frozen=True)
class HamiltonCycle:
    """Vertex order of a spanning cycle (consecutive entries adjacent,
    wrap-around included)."""

    order: tuple[int, ...]

    def __init__(self, order):
        object.__setattr__(self, "order", tuple(order))

    def __len__(self):
        return len(self.order)

    def validate(self, g: Graph, spanning: bool = True) -> None:
        seq = self.order
        if len(set(seq)) != len(seq):
            raise ValueError("cycle repeats a vertex")
        if spanning and len(seq) != g.n:
            raise ValueError(f"cycle of length {len(seq)} does not span order {g.n}")
        if len(seq) < 3:
            raise ValueError("cycle needs at least 3 vertices")
        for i, v in enumerate(seq):
            if not g.has_edge(v, seq[(i + 1) % len(seq)]):
                raise ValueError(f"({v},{seq[(i + 1) % len(seq)]}) is not an edge")


@dataclass(frozen=True)
class Chord:
    """Edge between two non-consecutive vertices of a reference cycle."""

    a: int
    b: int

    def arcs(self, cycle: HamiltonCycle) -> tuple[int, int]:
        """Arc lengths (in edges) from a forward to b, and b forward to a."""
        seq = cycle.order
        pa, pb = seq.index(self.a), seq.index(self.b)
        d = (pb - pa) % len(seq)
        return d, len(seq) - d


@dataclass(frozen=True)
class CycleSearch:
    status: str  # found | none | budget
    cycle: Optional[HamiltonCycle] = None
    missing: Optional[int] = None
    nodes: int = 0


def find_hamilton_cycle(
    g: Graph, budget: Optional[SearchBudget] = None, exclude: Optional[int] = None
) -> CycleSearch:
    """Backtracking Hamilton cycle search with availability and
    connectivity pruning. ``exclude`` drops one vertex, turning this into
    a search for a spanning cycle of g minus that vertex."""
    verts = [v for v in range(g.n) if v != exclude]
    k = len(verts)
    meter = _Meter(budget)
    if k < 3:
        return CycleSearch(NONE, nodes=0)
    drop = ~(1 << exclude) if exclude is not None else -1
    adj = [g.adj[v] & drop for v in range(g.n)]
    if any(adj[v].bit_count() < 2 for v in verts):
        return CycleSearch(NONE, nodes=0)
    start = verts[0]
    full = 0
    for v in verts:
        full |= 1 << v
    path = [start]
    onpath = 1 << start

    def extend() -> bool:
        nonlocal onpath
        u = path[-1]
        if len(path) == k:
            return bool(adj[u] >> start & 1)
        meter.tick()
        unvis = full & ~onpath
        avail = unvis | (1 << u) | (1 << start)
        m = unvis
        while m:
            low = m & -m
            m ^= low
            x = adj[low.bit_length() - 1] & avail
            if x & (x - 1) == 0:  # fewer than 2 usable neighbors
                return False
        # the unvisited region must be reachable from the path head
        seen = 1 << u
        frontier = adj[u] & unvis
        seen |= frontier
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= adj[low.bit_length() - 1] & unvis & ~seen
            seen |= nxt
            frontier = nxt
        if unvis & ~seen:
            return False
        cand = adj[u] & unvis
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            path.append(v)
            onpath |= low
            if extend():
                return True
            path.pop()
            onpath ^= low
        return False

    try:
        ok = extend()
    except _Stop:
        return CycleSearch(BUDGET, nodes=meter.nodes)
    if not ok:
        return CycleSearch(NONE, nodes=meter.nodes)
    cycle = HamiltonCycle(path)
    cycle.validate(g, spanning=exclude is None)
    return CycleSearch(FOUND, cycle, nodes=meter.nodes)


def find_cycle_missing_one(
    g: Graph, budget: Optional[SearchBudget] = None
) -> CycleSearch:
    """Cycle through all vertices but one, found by dropping each vertex in
    turn; reports which vertex was left out."""
    total = 0
    for u in range(g.n):
        res = find_hamilton_cycle(g, budget, exclude=u)
        total += res.nodes
        if res.status == FOUND:
            return CycleSearch(FOUND, res.cycle, missing=u, nodes=total)
        if res.status == BUDGET:
            return CycleSearch(BUDGET, nodes=total)
    return CycleSearch(NONE, nodes=total)


def _cycle_chords(g: Graph, cycle: HamiltonCycle):
    seq = cycle.order
    pos = {v: i for i, v in enumerate(seq)}
    L = len(seq)
    for a in seq:
        for b in g.neighbors(a):
            if b <= a or b not in pos:
                continue
            d = (pos[b] - pos[a]) % L
            if d != 1 and d != L - 1:
                yield Chord(a, b), d, L - d


def find_chord_4k(g: Graph, cycle: HamiltonCycle) -> Optional[Chord]:
    """Smallest chord closing a cycle of length divisible by 4 with one of
    its arcs (arc of 4k-1 edges plus the chord)."""
    best = None
    for chord, d, d2 in _cycle_chords(g, cycle):
        if d % 4 == 3 or d2 % 4 == 3:
            key = (chord.a, chord.b)
            if best is None or key < (best.a, best.b):
                best = chord
    return best


def find_odd_chord(g: Graph, cycle: HamiltonCycle) -> Optional[Chord]:
    """Smallest chord closing an odd cycle with one of its arcs."""
    best = None
    for chord, d, d2 in _cycle_chords(g, cycle):
        if d % 2 == 0 or d2 % 2 == 0:
            key = (chord.a, chord.b)
            if best is None or key < (best.a, best.b):
                best = chord
    return best


# -- exhaustive labeling searches ---------------------------------------


def _label_order(n: int) -> list[int]:
    # 1 first (it neutralizes every neighborhood it touches), then the even
    # labels: once they are all placed, any neighborhood trapped inside the
    # even-labeled set has completed with even gcd and the branch dies, so
    # the search never descends into hopeless odd-label territory.
    return [1] + list(range(2, n + 1, 2)) + list(range(3, n + 1, 2))


def search_npl(
    g: Graph,
    budget: Optional[SearchBudget] = None,
    symmetry_break: bool = False,
) -> Certificate:
    """Exhaustive neighborhood-prime labeling search with pruning.

    A partial assignment is abandoned as soon as some vertex of degree >= 2
    has a fully labeled neighborhood with gcd > 1. The result is FOUND with
    a verified labeling, EXHAUSTED (a proof that no NPL exists), or a
    budget report. ``symmetry_break`` optionally restricts where label 1
    can go to one vertex per automorphism orbit.
    """
    n = g.n
    deg = list(g.degrees())
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    labs = _label_order(n)
    adj_lists = [tuple(g.neighbors(v)) for v in range(n)]
    label = [0] * n
    rem = deg[:]
    acc = [0] * n
    meter = _Meter(budget)
    first_allowed = set(orbit_representatives(g)) if symmetry_break else None

    def place(d: int) -> bool:
        lab = labs[d]
        for u in order:
            if label[u]:
                continue
            if d == 0 and first_allowed is not None and u not in first_allowed:
                continue
            meter.tick()
            ok = True
            touched = []
            for w in adj_lists[u]:
                old = acc[w]
                acc[w] = gcd(old, lab)
                rem[w] -= 1
                touched.append((w, old))
                if rem[w] == 0 and deg[w] > 1 and acc[w] != 1:
                    ok = False
                    break
            if ok:
                label[u] = lab
                if d + 1 == n or place(d + 1):
                    return True
                label[u] = 0
            for w, old in reversed(touched):
                acc[w] = old
                rem[w] += 1
        return False

    try:
        found = place(0)
    except _Stop:
        return Certificate.unknown(R_BUDGET, nodes=meter.nodes)
    if found:
        lab = Labeling(label)
        from .labeling import is_neighborhood_prime

        assert is_neighborhood_prime(g, lab)
        return Certificate.npl(R_SEARCH_FOUND, lab, nodes=meter.nodes)
    return Certificate.not_npl(R_SEARCH_EXHAUSTED, nodes=meter.nodes)


@dataclass(frozen=True)
class PrimeSearchResult:
    status: str  # found | none | budget
    labeling: Optional[Labeling] = None
    nodes: int = 0


def search_prime_labeling(
    g: Graph, budget: Optional[SearchBudget] = None
) -> PrimeSearchResult:
    """Exhaustive prime labeling search (edge endpoints coprime)."""
    n = g.n
    deg = list(g.degrees())
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    labs = _label_order(n)
    adj_lists = [tuple(g.neighbors(v)) for v in range(n)]
    label = [0] * n
    meter = _Meter(budget)

    def place(d: int) -> bool:
        lab = labs[d]
        for u in order:
            if label[u]:
                continue
            meter.tick()
            if all(gcd(lab, label[w]) == 1 for w in adj_lists[u] if label[w]):
                label[u] = lab
                if d + 1 == n or place(d + 1):
                    return True
                label[u] = 0
        return False

    try:
        found = place(0)
    except _Stop:
        return PrimeSearchResult(BUDGET, nodes=meter.nodes)
    if found:
        return PrimeSearchResult(FOUND, Labeling(label), nodes=meter.nodes)
    return PrimeSearchResult(NONE, nodes=meter.nodes)


# -- automorphism orbits (for the optional symmetry flag) ----------------


def _refine(n: int, adj: tuple[int, ...], part: list[list[int]]) -> list[list[int]]:
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


def _canon_key(g: Graph, marked: Optional[int] = None) -> int:
    """Minimum adjacency bitstring over refinement-tree leaves; marking a
    vertex pins it to its own initial cell."""
    n = g.n
    deg = g.degrees()
    groups: dict[tuple, list[int]] = {}
    for v in range(n):
        groups.setdefault((v == marked, -deg[v]), []).append(v)
    part0 = [groups[k] for k in sorted(groups, reverse=True)]
    best: Optional[int] = None

    def leaf_key(perm: list[int]) -> int:
        bits = 0
        for j in range(1, n):
            pj = perm[j]
            for i in range(j):
                bits = bits << 1 | (g.adj[perm[i]] >> pj & 1)
        return bits

    def rec(part: list[list[int]]):
        nonlocal best
        part = _refine(n, g.adj, part)
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
    assert best is not None
    return best


def orbit_representatives(g: Graph) -> list[int]:
    """One vertex per automorphism orbit (smallest index in each orbit)."""
    reps: dict[int, int] = {}
    for v in range(g.n):
        key = _canon_key(g, marked=v)
        reps.setdefault(key, v)
    return sorted(reps.values())
