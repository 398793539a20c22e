import json

from nplab.cli import Command, parse_command, parse_lobster_spec, run
from nplab.formats import parse_graph6, write_graph6
from nplab.graphs import gen_cycle
from nplab.labeling import Labeling, is_neighborhood_prime

C6 = write_graph6(gen_cycle(6))


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_family_gp(capsys):
    code, out, _ = invoke(capsys, "family", "gp", "12", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "npl"
    assert doc["reason"] == "hamiltonian-cycle"
    g = parse_graph6(doc["g6"])
    assert is_neighborhood_prime(g, Labeling(doc["labels"])).ok


def test_verify_k4(capsys):
    code, out, _ = invoke(capsys, "verify", "C~", "--labels", "1,2,3,4")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_verify_reports_witness(capsys):
    code, out, _ = invoke(capsys, "verify", C6, "--labels", "4,1,5,2,6,3")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] is False
    assert doc["failing_vertex"] == 5 and doc["gcd"] == 2


def test_verify_prime_mode(capsys):
    code, out, _ = invoke(capsys, "verify", "A_", "--labels", "1,2", "--prime")
    assert json.loads(out)["ok"] is True


def test_search_c6(capsys):
    code, out, _ = invoke(capsys, "search", C6)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "not-npl" and doc["reason"] == "search-exhausted"


def test_search_budget_exit_code(capsys):
    code, out, _ = invoke(capsys, "search", write_graph6(gen_cycle(14)),
                          "--node-limit", "4")
    assert code == 2
    assert json.loads(out)["verdict"] == "unknown"


def test_label_reverifies_through_verify(capsys):
    # the label output must round-trip through the verify subcommand
    code, out, _ = invoke(capsys, "label", "C~")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "npl"
    labels = ",".join(str(x) for x in doc["labels"])
    code, out, _ = invoke(capsys, "verify", "C~", "--labels", labels)
    assert code == 0 and json.loads(out)["ok"] is True


def test_edge_list_input(capsys):
    code, out, _ = invoke(capsys, "verify", "edges:0-1,1-2,2-0", "--labels", "1,2,3")
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = invoke(capsys, "verify", "edges:0-1@4", "--labels", "1,2,3,4")
    assert code == 0


def test_scan_files(tmp_path, capsys, corpus):
    src = tmp_path / "order5.g6"
    src.write_text("\n".join(corpus[5]) + "\n")
    code, out, _ = invoke(capsys, "scan", str(src))
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == len(corpus[5]) + 1  # records + summary
    assert json.loads(lines[-1])["summary"] is True


def test_scan_byte_stable_across_jobs(tmp_path, capsys, corpus):
    # the whole bundled corpus through order 7, serial vs pooled
    lines = [x for n in range(2, 8) for x in corpus[n]]
    src = tmp_path / "upto7.g6"
    src.write_text("\n".join(lines) + "\n")
    _, out1, _ = invoke(capsys, "scan", str(src), "--jobs", "1")
    _, out2, _ = invoke(capsys, "scan", str(src), "--jobs", "2")
    assert out1 == out2
    _, out3, _ = invoke(capsys, "scan", str(src), "--jobs", "1")
    assert out1 == out3  # idempotent across runs


def test_scan_parse_error_exit(tmp_path, capsys):
    src = tmp_path / "bad.g6"
    src.write_text("A_\n!!\n")
    code, out, _ = invoke(capsys, "scan", str(src))
    assert code == 3


def test_scan_budget_exit_code(tmp_path, capsys):
    src = tmp_path / "c14.g6"
    src.write_text(write_graph6(gen_cycle(14)) + "\n")
    code, out, _ = invoke(capsys, "scan", str(src), "--node-limit", "5")
    assert code == 2
    assert '"verdict": "unknown"' in out


def test_scan_thread_env(tmp_path, capsys, monkeypatch, corpus):
    src = tmp_path / "order5.g6"
    src.write_text("\n".join(corpus[5]) + "\n")
    _, serial, _ = invoke(capsys, "scan", str(src))
    monkeypatch.setenv("NPLAB_THREADS", "2")
    _, threaded, _ = invoke(capsys, "scan", str(src))
    assert serial == threaded


def test_scan_checkpoint_resume(tmp_path, capsys, corpus):
    src = tmp_path / "order5.g6"
    src.write_text("\n".join(corpus[5]) + "\n")
    full_out = tmp_path / "full.jsonl"
    code, _, _ = invoke(capsys, "scan", str(src), "--output", str(full_out))
    assert code == 0

    ck = tmp_path / "ck.json"
    ck.write_text(json.dumps({"done": 10}))
    part_out = tmp_path / "part.jsonl"
    part_out.write_text("")  # resumed scans append
    code, _, _ = invoke(capsys, "scan", str(src), "--output", str(part_out),
                        "--checkpoint", str(ck))
    assert code == 0
    assert json.loads(ck.read_text())["done"] == len(corpus[5])
    full_lines = full_out.read_text().splitlines()
    part_lines = part_out.read_text().splitlines()
    assert part_lines[:-1] == full_lines[10:-1]


def test_family_stars_and_dot(tmp_path, capsys):
    dot = tmp_path / "stars.dot"
    code, out, _ = invoke(capsys, "family", "stars", "15,8,5,4,1",
                          "--dot", str(dot))
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "prime" and doc["n"] == 38
    assert dot.read_text().startswith("graph G {")


def test_family_lobster(capsys):
    code, out, _ = invoke(capsys, "family", "lobster", ";15*m1;7*m1;4*m1;3*m1;")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "npl" and doc["n"] == 64


def test_family_cycle_and_union(capsys):
    code, out, _ = invoke(capsys, "family", "cycle", "6")
    doc = json.loads(out)
    assert doc["verdict"] == "not-npl"
    code, out, _ = invoke(capsys, "family", "union", "3", "3")
    doc = json.loads(out)
    assert doc["verdict"] == "not-npl" and doc["reason"] == "two-regular-reduction"


def test_random_cli(capsys, tmp_path):
    csv = tmp_path / "trials.csv"
    code, out, _ = invoke(capsys, "random", "gnd", "12", "3",
                          "--trials", "5", "--seed", "3", "--csv", str(csv))
    assert code == 0
    doc = json.loads(out)
    assert doc["trials"] == 5 and doc["npl_fraction"] == 1.0
    assert csv.read_text().startswith("trial,n,m,verdict")


def test_export_dot(capsys):
    code, out, _ = invoke(capsys, "export", "A_", "--labels", "2,1")
    assert code == 0
    assert 'label="2"' in out and "0 -- 1;" in out


def test_usage_errors_exit_1(capsys):
    assert invoke(capsys, "bogus")[0] == 1
    assert invoke(capsys, "verify", "C~")[0] == 1  # missing --labels
    assert invoke(capsys, "verify", "C~", "--labels", "1,2")[0] == 1  # size


def test_parse_errors_exit_3(capsys):
    code, _, err = invoke(capsys, "verify", "!!", "--labels", "1,2")
    assert code == 3
    assert "byte" in err
    assert invoke(capsys, "scan", "/nonexistent/path.g6")[0] == 3


def test_lobster_spec_parsing():
    spec = parse_lobster_spec(";15*m1;7*m1;4*m1;3*m1;")
    assert spec.spine_degrees() == (1, 17, 9, 6, 5, 1)
    spec = parse_lobster_spec("p,m2;;3*p")
    assert spec.spine[0] == (0, 2) and spec.spine[1] == ()
    assert spec.spine[2] == (0, 0, 0)


def test_command_roundtrip():
    for argv in [
        ["family", "gp", "12", "3"],
        ["verify", "C~", "--labels", "1,2,3,4"],
        ["scan", "-", "--mode", "fast", "--jobs", "2", "--timing"],
        ["random", "gnd", "12", "3", "--trials", "7", "--seed", "s"],
        ["search", "C~", "--node-limit", "10"],
    ]:
        cmd = parse_command(argv)
        assert isinstance(cmd, Command)
        again = parse_command(cmd.to_argv())
        assert again == cmd
        assert parse_command(again.to_argv()) == again
