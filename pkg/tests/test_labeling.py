import random
from itertools import islice

import pytest

from nplab.graphs import Graph, gen_complete, gen_cycle, gen_path, gen_star, gen_union
from nplab.labeling import (
    Labeling,
    NeighborhoodGraph,
    ObstructionCapError,
    even_set_obstruction,
    is_neighborhood_prime,
    is_prime_labeling,
    lift_prime_to_npl,
    neighborhood_graphs,
    npl_iff_prime_2regular,
    unique_neighborhood_graph,
)
from nplab.search import search_npl, search_prime_labeling
from oracles import naive_is_npl, naive_is_prime


def test_labeling_validation():
    f = Labeling([3, 1, 4, 2, 5])
    assert f.of(0) == 3 and f.vertex_of(5) == 4
    assert Labeling.from_csv("3,1,4,2,5") == f
    assert f.as_csv() == "3,1,4,2,5"
    with pytest.raises(ValueError):
        Labeling([1, 1, 2])
    with pytest.raises(ValueError):
        Labeling([0, 1, 2])


def test_is_neighborhood_prime_examples():
    assert is_neighborhood_prime(gen_cycle(5), Labeling([3, 1, 4, 2, 5])).ok
    check = is_neighborhood_prime(gen_cycle(6), Labeling([4, 1, 5, 2, 6, 3]))
    assert not check.ok
    assert check.vertex == 5  # the last vertex of the cycle
    assert check.value == 2
    k2 = Graph.from_edges(2, [(0, 1)])
    assert is_neighborhood_prime(k2, Labeling([1, 2])).ok  # degree-1 is vacuous
    with pytest.raises(ValueError):
        is_neighborhood_prime(k2, Labeling([1, 2, 3]))


def test_is_prime_labeling_examples():
    assert is_prime_labeling(gen_cycle(3), Labeling([1, 2, 3])).ok
    star = gen_star(3)
    check = is_prime_labeling(star, Labeling([2, 1, 3, 4]))  # center 2, a leaf 4
    assert not check.ok and check.edge == (0, 3)
    assert is_prime_labeling(Graph.from_edges(2, [(0, 1)]), Labeling([1, 2])).ok


def test_verifiers_match_naive_oracle():
    rng = random.Random(17)
    for _ in range(1000):
        n = rng.randint(2, 10)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4
        ]
        g = Graph.from_edges(n, edges)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        f = Labeling(perm)
        assert is_neighborhood_prime(g, f).ok == naive_is_npl(g, perm)
        assert is_prime_labeling(g, f).ok == naive_is_prime(g, perm)


def test_neighborhood_graphs_p4_unique():
    hs = list(neighborhood_graphs(gen_path(4)))
    assert len(hs) == 1
    assert set(hs[0].graph.edges()) == {(0, 2), (1, 3)}  # two disjoint edges


def test_neighborhood_graphs_c6_unique():
    h = unique_neighborhood_graph(gen_cycle(6))
    comps = h.graph.components()
    assert sorted(len(c) for c in comps) == [3, 3]
    assert all(h.graph.degree(v) == 2 for v in range(6))  # two triangles


def test_neighborhood_graphs_star_choices():
    hs = list(neighborhood_graphs(gen_star(3)))
    assert len(hs) == 3
    edge_sets = {tuple(sorted(h.graph.edges())) for h in hs}
    assert edge_sets == {((1, 2),), ((1, 3),), ((2, 3),)}


def test_unique_neighborhood_graph_requires_low_degree():
    with pytest.raises(ValueError):
        unique_neighborhood_graph(gen_star(3))


def test_lift_c5_distance_two_cycle():
    g = gen_cycle(5)
    h = unique_neighborhood_graph(g)
    # H is the distance-2 cycle (0,2,4,1,3); label it 1..5 in cycle order
    values = [0] * 5
    for idx, v in enumerate([0, 2, 4, 1, 3]):
        values[v] = idx + 1
    cert = lift_prime_to_npl(g, h, Labeling(values))
    assert cert.is_npl
    assert is_neighborhood_prime(g, cert.labeling).ok


def test_lift_c8_through_two_squares():
    g = gen_cycle(8)
    h = unique_neighborhood_graph(g)
    res = search_prime_labeling(h.graph)
    assert res.status == "found"
    cert = lift_prime_to_npl(g, h, res.labeling)
    assert cert.is_npl


def test_lift_rejects_non_prime_labeling():
    g = gen_cycle(6)
    h = unique_neighborhood_graph(g)  # two triangles: never prime
    with pytest.raises(ValueError):
        lift_prime_to_npl(g, h, Labeling([1, 2, 3, 4, 5, 6]))


def test_lift_soundness_small_orders(small_graphs):
    rng = random.Random(23)
    sample = small_graphs[4] + small_graphs[5] + rng.sample(small_graphs[6], 40)
    for g in sample:
        for h in islice(neighborhood_graphs(g), 6):
            for _ in range(25):
                perm = list(range(1, g.n + 1))
                rng.shuffle(perm)
                f = Labeling(perm)
                if is_prime_labeling(h.graph, f).ok:
                    assert is_neighborhood_prime(g, f).ok


def test_two_regular_equivalence_examples():
    for g, expected in [
        (gen_cycle(5), True),
        (gen_cycle(6), False),
        (gen_union([gen_cycle(3), gen_cycle(3)]), False),
    ]:
        eq = npl_iff_prime_2regular(g)
        assert eq.consistent
        assert eq.base_npl is expected
    with pytest.raises(ValueError):
        npl_iff_prime_2regular(gen_path(4))


def test_even_set_obstruction_examples():
    assert even_set_obstruction(gen_cycle(6)) is not None
    assert even_set_obstruction(gen_complete(4)) is None
    assert even_set_obstruction(gen_cycle(10)) is not None


def test_even_set_obstruction_cycle_pattern():
    for n in range(3, 19):
        fired = even_set_obstruction(gen_cycle(n)) is not None
        assert fired == (n % 4 == 2), f"C_{n}"


def test_even_set_obstruction_soundness(small_graphs, corpus):
    # whenever the obstruction fires, exhaustive search confirms not-NPL
    from nplab.formats import parse_graph6

    fired = 0
    pool = [g for n in (5, 6, 7) for g in small_graphs[n]]
    pool += [parse_graph6(line) for line in corpus[8]]
    for g in pool:
        if g.max_degree < 2:
            continue
        if even_set_obstruction(g) is not None:
            fired += 1
            assert search_npl(g).verdict == "not-npl"
    assert fired >= 3  # C6, two triangles, C3+C5 at least


def test_even_set_obstruction_cap():
    with pytest.raises(ObstructionCapError):
        even_set_obstruction(gen_cycle(22))
    assert even_set_obstruction(gen_cycle(22), cap=22) is not None


def test_neighborhood_graph_validation():
    g = gen_star(3)
    with pytest.raises(ValueError):
        NeighborhoodGraph(g, ((0, (1, 2)), (1, (0, 2))), Graph.from_edges(4, [(1, 2)]))
