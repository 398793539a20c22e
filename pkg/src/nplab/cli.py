"""Command-line front end.

Subcommands: verify, label, search, scan, family, random, export. Exit
codes: 0 success, 1 usage error, 2 budget-limited unknown, 3 I/O or parse
error. Graphs are given as graph6 strings, edge lists, or files; labelings
as comma-separated integers indexed by vertex. Worker count for scans
defaults to the NPLAB_THREADS environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .construct import (
    certify_sufficient,
    label_gp,
    label_grid,
    label_grid3,
    label_lobster_surplus,
    label_reduced_lobster,
    label_union_of_stars,
    surplus_slack,
)
from .formats import Graph6Error, export_dot, parse_graph6, write_graph6
from .graphs import (
    Graph,
    GraphError,
    LobsterSpec,
    gen_cycle,
    gen_generalized_petersen,
    gen_grid,
    gen_lobster,
    gen_union,
)
from .labeling import NPL, UNKNOWN, Labeling, is_neighborhood_prime, is_prime_labeling
from .randomgraphs import experiment_npl_rate
from .scan import scan_graph6_stream
from .search import SearchBudget, search_npl


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class Command:
    """A parsed invocation; ``to_argv`` emits its canonical spelling."""

    subcommand: str
    positionals: tuple[str, ...]
    options: tuple[tuple[str, str], ...]  # sorted (flag, value) pairs

    def to_argv(self) -> list[str]:
        argv = [self.subcommand, *self.positionals]
        for flag, value in self.options:
            if value == "True":
                argv.append(f"--{flag}")
            else:
                argv.extend([f"--{flag}", value])
        return argv


_POSITIONALS = {
    "verify": ["graph"],
    "label": ["graph"],
    "search": ["graph"],
    "scan": ["input"],
    "family": ["kind", "params"],
    "random": ["model", "params"],
    "export": ["graph"],
}


def _build_parser() -> _Parser:
    top = _Parser(prog="nplab", description=__doc__)
    sub = top.add_subparsers(dest="subcommand", required=True)

    def budget_opts(p):
        p.add_argument("--node-limit", type=int, default=None)
        p.add_argument("--time-limit", type=float, default=None)

    def graph_arg(p):
        p.add_argument("graph", help="graph6 string, or 'edges:0-1,1-2[,...][@N]', "
                                     "or 'file:PATH' (first line as graph6)")

    p = sub.add_parser("verify", help="check a labeling for the neighborhood-prime property")
    graph_arg(p)
    p.add_argument("--labels", required=True, help="comma-separated labels by vertex index")
    p.add_argument("--prime", action="store_true", default=False,
                   help="check the prime-labeling property instead")

    p = sub.add_parser("label", help="find a certificate via the cheap-first dispatcher")
    graph_arg(p)
    budget_opts(p)

    p = sub.add_parser("search", help="exhaustive labeling search")
    graph_arg(p)
    budget_opts(p)

    p = sub.add_parser("scan", help="classify a newline-delimited graph6 stream")
    p.add_argument("input", help="path or '-' for stdin")
    p.add_argument("--mode", choices=["exact", "fast"], default="exact")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--output", default="-")
    p.add_argument("--timing", action="store_true", default=False)
    p.add_argument("--long", action="store_true", default=False,
                   help="allow very large inputs (use with --checkpoint)")
    p.add_argument("--checkpoint", default=None,
                   help="JSON file tracking progress for resumable scans")
    budget_opts(p)

    p = sub.add_parser("family", help="build and label a graph family instance")
    p.add_argument("kind", choices=["gp", "grid", "grid3", "lobster", "stars",
                                    "cycle", "union"])
    p.add_argument("params", nargs="+",
                   help="family parameters, e.g. '12 3' for gp; lobster "
                        "spine like ';15*m1;7*m1;'")
    p.add_argument("--dot", default=None, help="write DOT here ('-' for stdout)")
    budget_opts(p)

    p = sub.add_parser("random", help="labeling-rate experiment on random graphs")
    p.add_argument("model", choices=["gnp", "gnd"])
    p.add_argument("params", nargs="+", help="'n p' for gnp or 'n d' for gnd")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", default="0")
    p.add_argument("--csv", default=None, help="write the per-trial table here")
    p.add_argument("--timing", action="store_true", default=False)
    budget_opts(p)

    p = sub.add_parser("export", help="write a graph as DOT")
    graph_arg(p)
    p.add_argument("--labels", default=None)
    p.add_argument("--output", default="-")

    return top


def parse_command(argv: Sequence[str]) -> Command:
    ns = _build_parser().parse_args(list(argv))
    sub = ns.subcommand
    pos = []
    for name in _POSITIONALS[sub]:
        value = getattr(ns, name)
        if isinstance(value, list):
            pos.extend(str(x) for x in value)
        else:
            pos.append(str(value))
    pos = tuple(pos)
    skip = set(_POSITIONALS[sub]) | {"subcommand"}
    options = []
    for key, value in vars(ns).items():
        if key in skip or value in (None, False):
            continue
        options.append((key.replace("_", "-"), str(value)))
    return Command(sub, pos, tuple(sorted(options)))


def _load_graph(token: str) -> Graph:
    if token.startswith("edges:"):
        body = token[len("edges:"):]
        order = None
        if "@" in body:
            body, n_part = body.split("@", 1)
            order = int(n_part)
        edges = []
        if body:
            for part in body.split(","):
                a, b = part.split("-")
                edges.append((int(a), int(b)))
        if order is None:
            order = max((max(e) for e in edges), default=0) + 1
        return Graph.from_edges(order, edges)
    if token.startswith("file:"):
        with open(token[len("file:"):], "r", encoding="ascii") as fh:
            for line in fh:
                if line.strip():
                    return parse_graph6(line)
        raise Graph6Error("file holds no graph6 line", 0)
    return parse_graph6(token)


def _budget(ns) -> Optional[SearchBudget]:
    if ns.node_limit is None and ns.time_limit is None:
        return None
    return SearchBudget(ns.node_limit, ns.time_limit)


def _emit(text: str, dest: str):
    if dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cert_exit(cert) -> int:
    return 2 if cert.verdict == UNKNOWN else 0


def _print_cert(g: Graph, cert, extra=None):
    out = {"n": g.n, "m": g.m, "g6": write_graph6(g)}
    out.update(cert.to_dict())
    if extra:
        out.update(extra)
    print(json.dumps(out, sort_keys=True))


def _ints(tokens) -> list[int]:
    if isinstance(tokens, str):
        tokens = [tokens]
    return [int(tok) for part in tokens for tok in part.split(",") if tok]


def parse_lobster_spec(text: str) -> LobsterSpec:
    """Spine segments split by ';'; tokens 'p' (pendant) or 'mK' (middle
    with K leaves), optionally repeated as 'COUNT*TOKEN'."""
    spine = []
    for segment in text.split(";"):
        atts = []
        for token in segment.split(","):
            token = token.strip()
            if not token:
                continue
            count = 1
            if "*" in token:
                head, token = token.split("*", 1)
                count = int(head)
            if token == "p":
                code = 0
            elif token.startswith("m"):
                code = int(token[1:])
                if code < 1:
                    raise UsageError("middle vertices need at least one leaf")
            else:
                raise UsageError(f"bad lobster token {token!r}")
            atts.extend([code] * count)
        spine.append(atts)
    return LobsterSpec(spine)


def _run_family(ns) -> int:
    budget = _budget(ns)
    kind = ns.kind
    if kind == "gp":
        n, k = _ints(ns.params)
        g = gen_generalized_petersen(n, k)
        cert = label_gp(n, k, budget)
    elif kind == "grid":
        m, n = _ints(ns.params)
        g = gen_grid([m, n])
        cert = label_grid(m, n)
    elif kind == "grid3":
        l, m, n = _ints(ns.params)
        g = gen_grid([l, m, n])
        cert = label_grid3(l, m, n, budget)
    elif kind == "cycle":
        (n,) = _ints(ns.params)
        g = gen_cycle(n)
        cert = certify_sufficient(g, budget)
    elif kind == "union":
        lengths = _ints(ns.params)
        g = gen_union([gen_cycle(x) for x in lengths])
        cert = certify_sufficient(g, budget)
    elif kind == "stars":
        sizes = _ints(ns.params)
        res = label_union_of_stars(sizes)
        out = {
            "family": "union-of-stars",
            "sizes": sizes,
            "n": res.graph.n,
            "m": res.graph.m,
            "g6": write_graph6(res.graph),
            "verdict": "prime",
            "labels": list(res.labeling.values),
        }
        print(json.dumps(out, sort_keys=True))
        if ns.dot:
            _emit(export_dot(res.graph, res.labeling), ns.dot)
        return 0
    else:  # lobster
        spec = parse_lobster_spec(",".join(ns.params))
        g = gen_lobster(spec)
        degs = spec.spine_degrees()
        interior = degs[1:-1]
        if (spec.is_reduced() and interior and min(interior) >= 3
                and sum(1 for d in interior if d > 16) <= 1):
            cert = label_reduced_lobster(spec)
        elif surplus_slack(spec) >= 0:
            cert = label_lobster_surplus(spec, budget)
        else:
            cert = certify_sufficient(g, budget)
    _print_cert(g, cert)
    if ns.dot and cert.labeling is not None:
        _emit(export_dot(g, cert.labeling), ns.dot)
    return _cert_exit(cert)


def _run_scan(ns) -> int:
    jobs = ns.jobs
    if jobs is None:
        jobs = int(os.environ.get("NPLAB_THREADS", "1"))
    budget = _budget(ns)

    skip = 0
    done_before = 0
    if ns.checkpoint and os.path.exists(ns.checkpoint):
        with open(ns.checkpoint, "r", encoding="utf-8") as fh:
            skip = done_before = int(json.load(fh).get("done", 0))

    if ns.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(ns.input, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    data_lines = sum(1 for x in lines if x.strip())
    if data_lines > 100000 and not ns.long:
        raise UsageError(
            f"{data_lines} graphs in input; pass --long (and ideally "
            "--checkpoint) for runs this large"
        )

    out_fh = None
    if ns.output != "-":
        out_fh = open(ns.output, "a" if skip else "w", encoding="utf-8")
    written = 0

    def sink(rec):
        nonlocal written
        text = rec.to_json(timing=ns.timing) + "\n"
        if out_fh is None:
            sys.stdout.write(text)
        else:
            out_fh.write(text)
        written += 1
        if ns.checkpoint and written % 1000 == 0:
            _write_checkpoint(ns.checkpoint, done_before + written)

    report = scan_graph6_stream(
        lines, mode=ns.mode, budget=budget, jobs=jobs, skip=skip, sink=sink
    )
    summary = report.summary_json(timing=ns.timing) + "\n"
    if out_fh is None:
        sys.stdout.write(summary)
    else:
        out_fh.write(summary)
        out_fh.close()
    if ns.checkpoint:
        _write_checkpoint(ns.checkpoint, done_before + written)
    if report.errors:
        return 3
    if report.unknowns:
        return 2
    return 0


def _write_checkpoint(path: str, done: int):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"done": done}, fh)


def run(argv: Sequence[str]) -> int:
    try:
        ns = _build_parser().parse_args(list(argv))
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1

    try:
        if ns.subcommand == "verify":
            g = _load_graph(ns.graph)
            f = Labeling.from_csv(ns.labels)
            if len(f) != g.n:
                raise UsageError(f"{len(f)} labels for a graph of order {g.n}")
            if ns.prime:
                check = is_prime_labeling(g, f)
                out = {"property": "prime", "ok": check.ok}
                if check.edge:
                    out["failing_edge"] = list(check.edge)
            else:
                check = is_neighborhood_prime(g, f)
                out = {"property": "neighborhood-prime", "ok": check.ok}
                if not check.ok:
                    out["failing_vertex"] = check.vertex
                    out["gcd"] = check.value
            print(json.dumps(out, sort_keys=True))
            return 0
        if ns.subcommand == "label":
            g = _load_graph(ns.graph)
            cert = certify_sufficient(g, _budget(ns))
            _print_cert(g, cert)
            return _cert_exit(cert)
        if ns.subcommand == "search":
            g = _load_graph(ns.graph)
            cert = search_npl(g, _budget(ns))
            _print_cert(g, cert)
            return _cert_exit(cert)
        if ns.subcommand == "scan":
            return _run_scan(ns)
        if ns.subcommand == "family":
            return _run_family(ns)
        if ns.subcommand == "random":
            parts = [tok for chunk in ns.params for tok in chunk.split(",") if tok]
            if ns.model == "gnp":
                params = {"n": int(parts[0]), "p": float(parts[1])}
            else:
                params = {"n": int(parts[0]), "d": int(parts[1])}
            report = experiment_npl_rate(ns.model, params, ns.trials, ns.seed,
                                         _budget(ns))
            print(report.to_json(timing=ns.timing, indent=2))
            if ns.csv:
                _emit(report.per_trial_csv(), ns.csv)
            return 2 if report.unknowns else 0
        if ns.subcommand == "export":
            g = _load_graph(ns.graph)
            f = Labeling.from_csv(ns.labels) if ns.labels else None
            if f is not None and len(f) != g.n:
                raise UsageError(f"{len(f)} labels for a graph of order {g.n}")
            _emit(export_dot(g, f), ns.output)
            return 0
        raise UsageError(f"unknown subcommand {ns.subcommand!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (Graph6Error, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
