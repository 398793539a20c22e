"""Labelings, verification, certificates, and neighborhood graphs.

A labeling is a bijection from vertices onto {1..n}. The two verifiers are
exact and report the smallest failing witness. Certificates tie a verdict
to the argument that produced it, and every positive certificate carries a
labeling that re-verifies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Iterator, Optional

from .graphs import Graph

NPL = "npl"
NOT_NPL = "not-npl"
UNKNOWN = "unknown"

# certificate reasons (which argument settled the verdict)
R_HAMILTONIAN = "hamiltonian-cycle"
R_CHORD_4K = "chord-4k"
R_ODD_CHORD = "odd-chord"
R_CIRCUMFERENCE = "circumference"
R_FORMULA = "explicit-formula"
R_LARGE_DEGREE = "large-degree"
R_LIFT = "neighborhood-lift"
R_SEARCH_FOUND = "search-found"
R_SEARCH_EXHAUSTED = "search-exhausted"
R_EVEN_SET = "even-set-obstruction"
R_EDGE_BOUND = "edge-count-bound"
R_DIRAC = "dirac-bound"
R_TWO_REGULAR = "two-regular-reduction"
R_VACUOUS = "vacuous"


class ObstructionCapError(RuntimeError):
    """Even-set obstruction refused: subset space too large for the cap."""


@dataclass(frozen=True)
class Labeling:
    """Bijective assignment vertex index -> label in {1..n}."""

    values: tuple[int, ...]

    def __init__(self, values):
        vals = tuple(int(x) for x in values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError("labeling is not a bijection onto {1..n}")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def of(self, v: int) -> int:
        return self.values[v]

    def vertex_of(self, label: int) -> int:
        return self.values.index(label)

    def as_csv(self) -> str:
        return ",".join(str(x) for x in self.values)

    @staticmethod
    def from_csv(text: str) -> "Labeling":
        return Labeling(int(tok) for tok in text.split(","))


@dataclass(frozen=True)
class NplCheck:
    ok: bool
    vertex: Optional[int] = None   # smallest failing vertex
    value: Optional[int] = None    # the offending neighborhood gcd

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PrimeCheck:
    ok: bool
    edge: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def is_neighborhood_prime(g: Graph, f: Labeling) -> NplCheck:
    """True iff every vertex of degree >= 2 has neighbor labels with gcd 1."""
    if len(f) != g.n:
        raise ValueError(f"labeling of size {len(f)} on graph of order {g.n}")
    vals = f.values
    for v in range(g.n):
        mask = g.adj[v]
        if mask.bit_count() < 2:
            continue
        acc = 0
        while mask:
            low = mask & -mask
            acc = gcd(acc, vals[low.bit_length() - 1])
            if acc == 1:
                break
            mask ^= low
        if acc != 1:
            return NplCheck(False, v, acc)
    return NplCheck(True)


def is_prime_labeling(g: Graph, f: Labeling) -> PrimeCheck:
    """True iff the endpoint labels of every edge are coprime."""
    if len(f) != g.n:
        raise ValueError(f"labeling of size {len(f)} on graph of order {g.n}")
    vals = f.values
    for u, v in g.edges():
        if gcd(vals[u], vals[v]) != 1:
            return PrimeCheck(False, (u, v))
    return PrimeCheck(True)


@dataclass(frozen=True)
class Certificate:
    """Verdict plus the machine-checkable argument behind it.

    An ``npl`` verdict always carries a labeling that re-verifies; a
    ``not-npl`` verdict names an obstruction or a finished exhaustive
    search.
    """

    verdict: str
    reason: str
    labeling: Optional[Labeling] = None
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.verdict == NPL and self.labeling is None:
            raise ValueError("npl certificate without a labeling")

    @staticmethod
    def npl(reason: str, labeling: Labeling, **params) -> "Certificate":
        return Certificate(NPL, reason, labeling, params)

    @staticmethod
    def not_npl(reason: str, **params) -> "Certificate":
        return Certificate(NOT_NPL, reason, None, params)

    @staticmethod
    def unknown(reason: str, **params) -> "Certificate":
        return Certificate(UNKNOWN, reason, None, params)

    @property
    def is_npl(self) -> bool:
        return self.verdict == NPL

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict, "reason": self.reason}
        if self.labeling is not None:
            out["labels"] = list(self.labeling.values)
        if self.params:
            out["params"] = {k: _jsonable(v) for k, v in sorted(self.params.items())}
        return out


def _jsonable(v):
    if isinstance(v, Labeling):
        return list(v.values)
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


# -- neighborhood graphs ----------------------------------------------


@dataclass(frozen=True)
class NeighborhoodGraph:
    """One choice of an edge inside each neighborhood of a degree->=2 vertex.

    ``chosen[i]`` is (v, (a, b)) with {a, b} inside N(v); ``graph`` is the
    simple graph on the same vertex set whose edges are the chosen pairs
    (duplicates collapse).
    """

    base: Graph
    chosen: tuple[tuple[int, tuple[int, int]], ...]
    graph: Graph

    def __post_init__(self):
        need = [v for v in range(self.base.n) if self.base.degree(v) >= 2]
        got = [v for v, _ in self.chosen]
        if got != need:
            raise ValueError("chosen edges do not cover exactly the degree->=2 vertices")
        for v, (a, b) in self.chosen:
            if a == b or not (self.base.has_edge(v, a) and self.base.has_edge(v, b)):
                raise ValueError(f"chosen pair ({a},{b}) not inside N({v})")
        edges = {tuple(sorted(p)) for _, p in self.chosen}
        if set(self.graph.edges()) != edges or self.graph.n != self.base.n:
            raise ValueError("derived graph does not match chosen pairs")


def _make_neighborhood_graph(base: Graph, chosen) -> NeighborhoodGraph:
    chosen = tuple((v, tuple(sorted(p))) for v, p in chosen)
    h = Graph.from_edges(base.n, [p for _, p in chosen])
    return NeighborhoodGraph(base, chosen, h)


def neighborhood_graphs(g: Graph) -> Iterator[NeighborhoodGraph]:
    """Lazily enumerate every neighborhood graph of g.

    Vertices of degree <= 1 contribute nothing. When the maximum degree is
    at most 2 the enumeration has exactly one element.
    """
    targets = [v for v in range(g.n) if g.degree(v) >= 2]
    options = [
        [(v, pair) for pair in combinations(sorted(g.neighbors(v)), 2)]
        for v in targets
    ]

    def rec(i: int, acc: list):
        if i == len(options):
            yield _make_neighborhood_graph(g, acc)
            return
        for pick in options[i]:
            acc.append(pick)
            yield from rec(i + 1, acc)
            acc.pop()

    return rec(0, [])


def unique_neighborhood_graph(g: Graph) -> NeighborhoodGraph:
    """The single neighborhood graph of a graph with maximum degree <= 2."""
    if g.max_degree > 2:
        raise ValueError("graph has a vertex of degree > 2; choice is not unique")
    return next(neighborhood_graphs(g))


def lift_prime_to_npl(g: Graph, h: NeighborhoodGraph, f: Labeling) -> Certificate:
    """Turn a prime labeling of a neighborhood graph into an NPL of g."""
    if h.base != g:
        raise ValueError("neighborhood graph was built for a different base graph")
    check = is_prime_labeling(h.graph, f)
    if not check:
        raise ValueError(f"labeling is not prime on the chosen graph (edge {check.edge})")
    npl = is_neighborhood_prime(g, f)
    if not npl:
        # cannot happen for a genuine neighborhood graph; fail loudly
        raise AssertionError(f"lift produced a non-NPL labeling at vertex {npl.vertex}")
    return Certificate.npl(R_LIFT, f, chosen_edges=tuple(p for _, p in h.chosen))


@dataclass(frozen=True)
class TwoRegularEquivalence:
    """NPL status of a 2-regular graph vs. primality of its unique
    neighborhood graph; the two booleans must agree."""

    base: Graph
    h: NeighborhoodGraph
    base_npl: bool
    h_prime: bool

    @property
    def consistent(self) -> bool:
        return self.base_npl == self.h_prime


def npl_iff_prime_2regular(g: Graph, budget=None) -> TwoRegularEquivalence:
    """Check both sides of the 2-regular equivalence by exhaustive search."""
    if any(g.degree(v) != 2 for v in range(g.n)):
        raise ValueError("graph is not 2-regular")
    from . import search  # local import; search depends on this module

    h = unique_neighborhood_graph(g)
    npl_cert = search.search_npl(g, budget)
    prime_res = search.search_prime_labeling(h.graph, budget)
    if npl_cert.verdict == UNKNOWN or prime_res.status == "budget":
        raise RuntimeError("budget exhausted before both searches finished")
    return TwoRegularEquivalence(
        g, h, npl_cert.verdict == NPL, prime_res.status == "found"
    )


# -- even-set obstruction ----------------------------------------------


def even_set_obstruction(g: Graph, cap: int = 20) -> Optional[Certificate]:
    """Fast certificate that no NPL exists, when the even labels cannot fit.

    Any labeling puts the floor(n/2) even labels on some vertex set S; if
    every such S swallows the whole neighborhood of some degree->=2 vertex,
    that neighborhood has even gcd and the graph has no NPL. Searches all
    candidate sets with backtracking, abandoning a partial S as soon as a
    neighborhood is trapped inside it. Sound but not complete: absence of
    the obstruction proves nothing.
    """
    if g.n < 2:
        raise ValueError("needs order >= 2")
    if g.n > cap:
        raise ObstructionCapError(
            f"order {g.n} above the obstruction cap {cap}; raise the cap to force it"
        )
    want = g.n // 2
    watched = [v for v in range(g.n) if g.degree(v) >= 2]
    if not watched:
        return None  # every labeling is vacuously an NPL
    adj = g.adj

    # find one "good" S: |S| = want and no watched neighborhood inside S
    def good(start: int, chosen_mask: int, size: int) -> bool:
        if size == want:
            return True
        if g.n - start < want - size:
            return False
        for v in range(start, g.n):
            mask = chosen_mask | (1 << v)
            trapped = False
            for w in g.neighbors(v):
                nb = adj[w]
                if nb.bit_count() >= 2 and nb & ~mask == 0:
                    trapped = True
                    break
            if not trapped and good(v + 1, mask, size + 1):
                return True
        return False

    if good(0, 0, 0):
        return None
    return Certificate.not_npl(R_EVEN_SET, even_labels=want, order=g.n)
