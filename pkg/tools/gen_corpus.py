#!/usr/bin/env python3
"""Generate graph6 corpora of all simple graphs of orders 2..MAXN.

Each order-n graph is obtained from some order-(n-1) graph by deleting a
vertex, so extending every smaller graph by one new vertex with every
possible neighborhood and deduplicating by canonical key enumerates the
isomorphism classes exactly. Counts are checked against the known numbers
of simple graphs before anything is written.

Usage: python tools/gen_corpus.py [MAXN] [OUTDIR]
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from graphiso import canon_graph, canon_key  # noqa: E402
from nplab.graphs import Graph  # noqa: E402
from nplab.formats import write_graph6  # noqa: E402

# number of simple graphs on 1..10 vertices
KNOWN_COUNTS = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168]


def extensions(g: Graph):
    n = g.n
    for mask in range(1 << n):
        masks = [g.adj[v] | ((mask >> v & 1) << n) for v in range(n)]
        masks.append(mask)
        m = g.m + mask.bit_count()
        yield Graph(n + 1, tuple(masks), m)


def generate(maxn: int, outdir: Path):
    outdir.mkdir(parents=True, exist_ok=True)
    level = {canon_key(Graph.from_edges(1)): Graph.from_edges(1)}
    for n in range(2, maxn + 1):
        t0 = time.time()
        nxt: dict = {}
        for g in level.values():
            for h in extensions(g):
                key = canon_key(h)
                if key not in nxt:
                    nxt[key] = canon_graph(h)
        level = nxt
        expected = KNOWN_COUNTS[n - 1]
        if len(level) != expected:
            raise SystemExit(
                f"order {n}: generated {len(level)} classes, expected {expected}"
            )
        lines = sorted(write_graph6(g) for g in level.values())
        path = outdir / f"graph{n}.g6"
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
        print(f"order {n}: {len(level)} graphs -> {path} "
              f"({time.time() - t0:.1f}s)")


if __name__ == "__main__":
    maxn = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    outdir = Path(sys.argv[2]) if len(sys.argv) > 2 else (
        Path(__file__).resolve().parent.parent / "data" / "corpus"
    )
    generate(maxn, outdir)
