"""Immutable graph values and family generators.

Vertices are dense 0-based indices. Adjacency is stored as one bitmask per
vertex (plain Python ints), so membership tests are O(1) and neighborhood
iteration is a tight bit loop at any order.

Generator index layouts are fixed and documented so labelings built for a
family instance are reproducible:

* ``gen_generalized_petersen(n, k)``: outer ring u_0..u_{n-1} at indices
  0..n-1, inner vertices v_0..v_{n-1} at indices n..2n-1.
* ``gen_grid(dims)``: row-major over coordinate tuples (last axis fastest).
* ``gen_lobster(spec)``: spine first, then per spine vertex its attachments
  in order, each middle vertex immediately followed by its leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph constructions or parameters."""


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; immutable after construction."""

    n: int
    adj: tuple[int, ...]
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph order must be at least 1")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        for v, mask in enumerate(self.adj):
            if mask >> self.n:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if mask >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in _iter_bits(mask):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency at ({v},{w})")
        if sum(mask.bit_count() for mask in self.adj) != 2 * self.m:
            raise GraphError("edge count does not match adjacency")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        if n < 1:
            raise GraphError("graph order must be at least 1")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        m = sum(mask.bit_count() for mask in masks) // 2
        return Graph(n, tuple(masks), m)

    # -- accessors ---------------------------------------------------

    def neighbors_mask(self, v: int) -> int:
        return self.adj[v]

    def neighbors(self, v: int) -> Iterator[int]:
        return _iter_bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adj)

    @property
    def max_degree(self) -> int:
        return max(mask.bit_count() for mask in self.adj)

    @property
    def min_degree(self) -> int:
        return min(mask.bit_count() for mask in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with the extra edges (existing ones are harmless)."""
        masks = list(self.adj)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        m = sum(mask.bit_count() for mask in masks) // 2
        return Graph(self.n, tuple(masks), m)

    def components(self) -> list[tuple[int, ...]]:
        seen = 0
        out = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = 1 << start
            while frontier:
                nxt = 0
                for v in _iter_bits(frontier):
                    nxt |= self.adj[v] & ~comp
                comp |= nxt
                frontier = nxt
            seen |= comp
            out.append(tuple(_iter_bits(comp)))
        return out


# -- family generators ----------------------------------------------


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_star(leaves: int) -> Graph:
    """Star with the given number of leaves; center is vertex 0."""
    if leaves < 0:
        raise GraphError("leaf count must be non-negative")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("order must be at least 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_union(parts: Sequence[Graph]) -> Graph:
    """Disjoint union; part vertices are shifted onto consecutive ranges."""
    if not parts:
        raise GraphError("union of no graphs")
    n = sum(g.n for g in parts)
    edges = []
    off = 0
    for g in parts:
        edges.extend((off + u, off + v) for u, v in g.edges())
        off += g.n
    return Graph.from_edges(n, edges)


def gen_generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer cycle u_i, spokes u_i v_i, inner edges v_i v_{i+k}.

    Requires n >= 3 and 1 <= k <= n/2; k = n/2 (n even) yields inner
    vertices of degree 2 since each inner edge arises once.
    """
    if n < 3:
        raise GraphError("generalized Petersen graph needs n >= 3")
    if not 1 <= k or 2 * k > n:
        raise GraphError(f"offset k={k} out of range for n={n}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def grid_index(dims: Sequence[int], coord: Sequence[int]) -> int:
    """Row-major index of a coordinate tuple (last axis varies fastest)."""
    idx = 0
    for d, c in zip(dims, coord):
        idx = idx * d + c
    return idx


def gen_grid(dims: Sequence[int]) -> Graph:
    """Cartesian product of paths, one factor per entry of ``dims``."""
    dims = list(dims)
    if not dims:
        raise GraphError("grid needs at least one dimension")
    if any(d < 1 for d in dims):
        raise GraphError("grid dimensions must be >= 1")
    n = 1
    for d in dims:
        n *= d
    edges = []
    coord = [0] * len(dims)

    def walk(axis: int):
        if axis == len(dims):
            idx = grid_index(dims, coord)
            for a in range(len(dims)):
                if coord[a] + 1 < dims[a]:
                    coord[a] += 1
                    edges.append((idx, grid_index(dims, coord)))
                    coord[a] -= 1
            return
        for c in range(dims[axis]):
            coord[axis] = c
            walk(axis + 1)
        coord[axis] = 0

    walk(0)
    return Graph.from_edges(n, edges)


# -- lobsters --------------------------------------------------------


@dataclass(frozen=True)
class LobsterSpec:
    """Attachment plan for a lobster tree.

    ``spine[i]`` lists the attachments of spine vertex i. Code 0 is a
    pendant leaf on the spine itself; code c >= 1 is a middle vertex
    carrying c pendant leaves (so every vertex ends up within distance 2
    of the spine).
    """

    spine: tuple[tuple[int, ...], ...]

    def __init__(self, spine: Iterable[Iterable[int]]):
        normalized = tuple(tuple(att) for att in spine)
        if not normalized:
            raise GraphError("lobster spine must be non-empty")
        for atts in normalized:
            for c in atts:
                if c < 0:
                    raise GraphError("attachment codes must be >= 0")
        object.__setattr__(self, "spine", normalized)

    @property
    def n_spine(self) -> int:
        return len(self.spine)

    @property
    def order(self) -> int:
        return self.n_spine + sum(1 if c == 0 else 1 + c
                                  for atts in self.spine for c in atts)

    def spine_degrees(self) -> tuple[int, ...]:
        degs = []
        for i, atts in enumerate(self.spine):
            path_deg = int(i > 0) + int(i < self.n_spine - 1)
            degs.append(path_deg + len(atts))
        return tuple(degs)

    def middle_degrees(self) -> tuple[int, ...]:
        """Degrees of the non-pendant off-spine vertices, in layout order."""
        return tuple(c + 1 for atts in self.spine for c in atts if c >= 1)

    def non_pendant_counts(self) -> tuple[int, ...]:
        """Number of middle vertices hanging off each spine vertex."""
        return tuple(sum(1 for c in atts if c >= 1) for atts in self.spine)

    @property
    def max_non_pendant(self) -> int:
        counts = self.non_pendant_counts()
        return max(counts) if counts else 0

    def is_reduced(self) -> bool:
        """No pendants on the spine, every attachment a degree-2 middle,
        and bare spine ends (so the spine cannot be extended)."""
        if self.n_spine < 3:
            return False
        if self.spine[0] or self.spine[-1]:
            return False
        return all(c == 1 for atts in self.spine[1:-1] for c in atts)


@dataclass(frozen=True)
class LobsterLayout:
    """Vertex indices produced by ``gen_lobster`` for one spec."""

    graph: Graph
    spine: tuple[int, ...]
    # pendants[i]: leaves attached directly to spine vertex i
    pendants: tuple[tuple[int, ...], ...]
    # middles[i]: (middle_vertex, leaf_indices) pairs for spine vertex i
    middles: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]


def build_lobster(spec: LobsterSpec) -> LobsterLayout:
    ns = spec.n_spine
    edges = [(i, i + 1) for i in range(ns - 1)]
    pendants: list[tuple[int, ...]] = []
    middles: list[tuple[tuple[int, tuple[int, ...]], ...]] = []
    nxt = ns
    for i, atts in enumerate(spec.spine):
        pend = []
        mids = []
        for c in atts:
            if c == 0:
                edges.append((i, nxt))
                pend.append(nxt)
                nxt += 1
            else:
                mid = nxt
                nxt += 1
                edges.append((i, mid))
                leaves = tuple(range(nxt, nxt + c))
                for leaf in leaves:
                    edges.append((mid, leaf))
                nxt += c
                mids.append((mid, leaves))
        pendants.append(tuple(pend))
        middles.append(tuple(mids))
    graph = Graph.from_edges(nxt, edges)
    return LobsterLayout(graph, tuple(range(ns)), tuple(pendants), tuple(middles))


def gen_lobster(spec: LobsterSpec) -> Graph:
    return build_lobster(spec).graph
