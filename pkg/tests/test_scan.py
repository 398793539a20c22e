import pytest

from nplab.formats import parse_graph6, write_graph6
from nplab.graphs import gen_cycle, gen_union
from nplab.scan import EXACT, FAST, scan_graph6_stream
from nplab.search import SearchBudget


def test_scan_small_orders_have_no_negatives(corpus):
    for n in (2, 3, 4):
        rep = scan_graph6_stream(corpus[n], mode=EXACT)
        assert len(rep.records) == len(corpus[n])
        assert rep.counts.get("not-npl", 0) == 0
        assert rep.counts["npl"] == len(corpus[n])


def test_scan_order6_catalog(corpus):
    rep = scan_graph6_stream(corpus[6], mode=EXACT)
    bad = [r for r in rep.records if r.verdict == "not-npl"]
    bad_keys = set()
    import graphiso

    for r in bad:
        bad_keys.add(graphiso.canon_key(parse_graph6(r.g6)))
    assert graphiso.canon_key(gen_cycle(6)) in bad_keys
    assert graphiso.canon_key(gen_union([gen_cycle(3), gen_cycle(3)])) in bad_keys


def test_scan_single_k4():
    rep = scan_graph6_stream(["C~"], mode=EXACT)
    assert rep.records[0].verdict == "npl"
    rep = scan_graph6_stream(["C~"], mode=FAST)
    assert rep.records[0].verdict == "npl"


def test_scan_records_match_input_lines():
    lines = ["A_", "", "C~", "  ", "A?"]
    rep = scan_graph6_stream(lines)
    assert [r.g6 for r in rep.records] == ["A_", "C~", "A?"]
    assert [r.index for r in rep.records] == [0, 1, 2]


def test_scan_parse_failures_do_not_stop_the_scan():
    rep = scan_graph6_stream(["A_", "!!", "C~"])
    assert [r.verdict for r in rep.records] == ["npl", "error", "npl"]
    assert rep.errors == 1
    assert "byte" in rep.records[1].error


def test_scan_parallel_output_is_byte_identical(corpus):
    lines = corpus[6]
    serial = scan_graph6_stream(lines, mode=EXACT, jobs=1)
    parallel = scan_graph6_stream(lines, mode=EXACT, jobs=2)
    a = "\n".join(r.to_json() for r in serial.records)
    b = "\n".join(r.to_json() for r in parallel.records)
    assert a == b


def test_scan_modes_agree(corpus):
    lines = corpus[5] + corpus[6]
    exact = scan_graph6_stream(lines, mode=EXACT)
    fast = scan_graph6_stream(lines, mode=FAST)
    for r1, r2 in zip(exact.records, fast.records):
        assert r1.verdict == r2.verdict, r1.g6


def test_scan_skip_resume(corpus):
    lines = corpus[5]
    full = scan_graph6_stream(lines, mode=EXACT)
    tail = scan_graph6_stream(lines, mode=EXACT, skip=20)
    assert [r.g6 for r in tail.records] == [r.g6 for r in full.records[20:]]
    assert [r.index for r in tail.records] == list(range(20, len(lines)))


def test_scan_budget_unknowns():
    g6 = write_graph6(gen_cycle(14))
    rep = scan_graph6_stream([g6], mode=EXACT, budget=SearchBudget(node_limit=5))
    assert rep.records[0].verdict == "unknown"
    assert rep.unknowns == 1


def test_scan_rejects_unknown_mode():
    with pytest.raises(ValueError):
        scan_graph6_stream([], mode="quick")


def test_record_json_shape():
    rep = scan_graph6_stream(["C~"])
    line = rep.records[0].to_json()
    assert '"millis"' not in line
    assert '"index": 0' in line and '"n": 4' in line and '"m": 6' in line
    line = rep.records[0].to_json(timing=True)
    assert '"millis"' in line
    assert '"summary": true' in rep.summary_json()
