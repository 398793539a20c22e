import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))
sys.path.insert(0, str(ROOT / "tools"))

CORPUS = ROOT / "data" / "corpus"


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS


@pytest.fixture(scope="session")
def corpus():
    """order -> list of graph6 lines, for orders 2..8."""
    from nplab.formats import parse_graph6

    out = {}
    for n in range(2, 9):
        path = CORPUS / f"graph{n}.g6"
        lines = [x for x in path.read_text().splitlines() if x.strip()]
        out[n] = lines
    return out


@pytest.fixture(scope="session")
def small_graphs(corpus):
    """order -> list of Graph, for orders 2..7 (8 stays as text; parse on use)."""
    from nplab.formats import parse_graph6

    return {n: [parse_graph6(x) for x in corpus[n]] for n in range(2, 8)}
