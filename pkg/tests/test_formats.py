import random

import pytest

from nplab.formats import Graph6Error, export_dot, parse_graph6, write_graph6
from nplab.graphs import Graph, gen_complete, gen_cycle
from nplab.construct import label_cycle_standard


def test_parse_hand_decoded_examples():
    g = parse_graph6("A_")
    assert (g.n, g.m) == (2, 1)
    g = parse_graph6("C~")
    assert (g.n, g.m) == (4, 6)
    g = parse_graph6("A?")
    assert (g.n, g.m) == (2, 0)


def test_write_examples():
    assert write_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"
    assert write_graph6(gen_complete(4)) == "C~"
    assert write_graph6(Graph.from_edges(1)) == "@"


def test_header_tolerated():
    assert parse_graph6(">>graph6<<A_").m == 1


def test_bit_order_is_column_major():
    # pair order (0,1),(0,2),(1,2),(0,3),...: a lone (1,2) edge sets bit 2
    g = Graph.from_edges(3, [(1, 2)])
    text = write_graph6(g)
    assert parse_graph6(text) == g
    # third bit of the single data byte
    assert ord(text[1]) - 63 == 0b001000


def test_roundtrip_corpus(corpus):
    for n, lines in corpus.items():
        for line in lines:
            assert write_graph6(parse_graph6(line)) == line


def test_roundtrip_large_order():
    rng = random.Random(99)
    n = 100
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.1]
    g = Graph.from_edges(n, edges)
    text = write_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_parse_errors_carry_offsets():
    with pytest.raises(Graph6Error) as err:
        parse_graph6("A!")
    assert "byte 1" in str(err.value)
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("C~~")  # too many data bytes
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # too few
    with pytest.raises(Graph6Error):
        parse_graph6("?")  # order 0 unsupported
    # nonzero padding: K2 needs one data bit; '_' has it plus zero padding,
    # '~' sets padding bits too
    with pytest.raises(Graph6Error) as err:
        parse_graph6("A~")
    assert "padding" in str(err.value)


def test_export_dot_plain_and_labeled():
    k2 = Graph.from_edges(2, [(0, 1)])
    doc = export_dot(k2)
    assert doc.startswith("graph G {")
    assert "0 -- 1;" in doc
    c5 = gen_cycle(5)
    doc = export_dot(c5, label_cycle_standard(5))
    for text in ('label="3"', 'label="1"', 'label="4"', 'label="2"', 'label="5"'):
        assert text in doc
    single = export_dot(Graph.from_edges(1))
    assert "0" in single and "--" not in single


def test_export_dot_size_mismatch():
    with pytest.raises(ValueError):
        export_dot(gen_cycle(5), label_cycle_standard(6))
