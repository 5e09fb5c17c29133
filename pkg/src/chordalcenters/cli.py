"""Command-line surface: analyze, check-center, construct-host, stretch,
verify, and enumerate.

Exit status: 0 for yes-verdicts / all clauses passing, 1 for no-verdicts or
counterexamples (always reported with a reproducing graph6 string), 2 for
usage or input errors.  JSON output is the stable machine interface; the
text rendering is best-effort.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graph import Graph, GraphError, TheoremCounterexample
from .chordality import chordality_index, simplicial_vertices
from .metrics import metric_summary
from .stretched import build_t_stretched
from .characterize import (
    DisjointDominatingCliques,
    SelfCenteredRadiusTwo,
    is_center_of_chordal,
)
from .construct import build_host
from .suites import SUITE_NAMES, run_suites, verify_graph
from . import io as gio


def _labelled(labels, vertices) -> list[str]:
    return [labels[v] for v in sorted(vertices)]


def _load_graph(args) -> tuple[Graph, tuple[str, ...]]:
    if getattr(args, "fixture", None):
        if args.fixture not in gio.FIXTURES:
            raise GraphError(f"unknown fixture {args.fixture!r}")
        return gio.FIXTURES[args.fixture]()
    if not getattr(args, "input", None):
        raise GraphError("no input given; pass a file, '-' for stdin, or --fixture")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    return gio.parse_graph(text, args.format)


def _emit(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report, indent=2, default=_json_default))
    else:
        for line in lines:
            print(line)


def _json_default(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"unserializable {type(obj)!r}")


def _cmd_analyze(args) -> int:
    g, labels = _load_graph(args)
    ms = metric_summary(g)
    rep = chordality_index(g)
    report = {
        "command": "analyze",
        "input": {"graph6": gio.to_graph6(g), "n": g.n},
        "result": {
            "radius": ms.radius,
            "diameter": ms.diameter,
            "eccentricity": {labels[v]: ms.ecc[v] for v in range(g.n)},
            "center": _labelled(labels, ms.center),
            "iterated_centers": [_labelled(labels, c) for c in ms.iterated_centers],
            "self_centered": ms.self_centered,
            "is_chordal": rep.is_chordal,
            "k_index": rep.k_index,
            "witness_cycle": [labels[v] for v in rep.witness_cycle] if rep.witness_cycle else None,
            "simplicial": _labelled(labels, simplicial_vertices(g)),
        },
    }
    lines = [
        f"graph6   {report['input']['graph6']}",
        f"n        {g.n}",
        f"radius   {ms.radius}",
        f"diameter {ms.diameter}",
        f"center   {{{', '.join(_labelled(labels, ms.center))}}}",
        f"chordal  {rep.is_chordal} (k={rep.k_index})",
        f"self-centered {ms.self_centered}",
    ]
    _emit(report, args.json, lines)
    return 0


def _cmd_check_center(args) -> int:
    g, labels = _load_graph(args)
    cert = is_center_of_chordal(g)
    evidence = None
    if isinstance(cert.evidence, DisjointDominatingCliques):
        evidence = {
            "kind": "disjoint-dominating-cliques",
            "k1": _labelled(labels, cert.evidence.k1),
            "k2": _labelled(labels, cert.evidence.k2),
        }
    elif isinstance(cert.evidence, SelfCenteredRadiusTwo):
        evidence = {
            "kind": "self-centered-radius-two",
            "center": _labelled(labels, cert.evidence.center),
            "family": [_labelled(labels, c) for c in cert.evidence.family.cliques],
        }
    report = {
        "command": "check-center",
        "input": {"graph6": gio.to_graph6(g), "n": g.n},
        "result": {
            "verdict": "yes" if cert.verdict else "no",
            "reason": cert.reason,
            "evidence": evidence,
        },
    }
    lines = [f"verdict {report['result']['verdict']}"]
    if cert.reason:
        lines.append(f"reason  {cert.reason}")
    if evidence:
        lines.append(f"evidence {evidence}")
    _emit(report, args.json, lines)
    return 0 if cert.verdict else 1


def _cmd_construct_host(args) -> int:
    g, labels = _load_graph(args)
    cert = is_center_of_chordal(g)
    if not cert.verdict:
        report = {
            "command": "construct-host",
            "input": {"graph6": gio.to_graph6(g), "n": g.n},
            "result": {"verdict": "no", "reason": cert.reason},
        }
        _emit(report, args.json, [f"verdict no ({cert.reason}); no host exists"])
        return 1
    hg = build_host(g, cert)
    report = {
        "command": "construct-host",
        "input": {"graph6": gio.to_graph6(g), "n": g.n},
        "result": {
            "construction": hg.construction,
            "host_graph6": gio.to_graph6(hg.host),
            "host_n": hg.host.n,
            "embedding": {labels[v]: hg.embedding[v] for v in range(g.n)},
            "added": hg.added,
            "verified": hg.verified,
        },
    }
    lines = [
        f"construction {hg.construction}",
        f"host     {gio.to_graph6(hg.host)}  (n={hg.host.n})",
        f"embedding {report['result']['embedding']}",
        f"added    {hg.added}",
    ]
    _emit(report, args.json, lines)
    return 0


def _cmd_stretch(args) -> int:
    g, labels = _load_graph(args)
    S = build_t_stretched(g, args.t)
    per_member = {}
    for u in sorted(S.T):
        sep = S.separators[u]
        per_member[labels[u]] = {
            "X": _labelled(labels, sep.cut),
            "W_u": _labelled(labels, sep.side_u),
            "W_rest": _labelled(labels, sep.side_rest),
        }
    report = {
        "command": "stretch",
        "input": {"graph6": gio.to_graph6(g), "n": g.n},
        "result": {"t": S.t, "T": _labelled(labels, S.T), "members": per_member},
    }
    lines = [f"t = {S.t}", f"T = {{{', '.join(_labelled(labels, S.T))}}}"]
    for name, data in per_member.items():
        lines.append(
            f"  {name}: X={{{', '.join(data['X'])}}}"
            f" W_u={{{', '.join(data['W_u'])}}}"
            f" W_rest={{{', '.join(data['W_rest'])}}}"
        )
    _emit(report, args.json, lines)
    return 0


def _cmd_verify(args) -> int:
    g, labels = _load_graph(args)
    clauses = verify_graph(g)
    report = {
        "command": "verify",
        "input": {"graph6": gio.to_graph6(g), "n": g.n},
        "result": {
            "clauses": [
                {
                    "name": c.name,
                    "applicable": c.applicable,
                    "passed": c.passed,
                    "info": c.info,
                }
                for c in clauses
            ],
            "all_ok": all(c.ok for c in clauses),
        },
    }
    lines = []
    for c in clauses:
        status = "skip" if not c.applicable else ("pass" if c.passed else "FAIL")
        suffix = f"  ({c.info})" if c.info else ""
        lines.append(f"{status:4} {c.name}{suffix}")
    _emit(report, args.json, lines)
    return 0 if all(c.ok for c in clauses) else 1


def _cmd_enumerate(args) -> int:
    names = [args.suite] if args.suite != "all" else ["all"]
    results = run_suites(names, args.max_n, jobs=args.jobs)
    report = {
        "command": "enumerate",
        "input": {"max_n": args.max_n, "suite": args.suite},
        "result": [
            {
                "suite": r.name,
                "graphs_checked": r.graphs_checked,
                "instances_checked": r.instances_checked,
                "counterexamples": r.counterexamples,
            }
            for r in results
        ],
    }
    lines = []
    for r in results:
        status = "ok" if r.ok else f"{len(r.counterexamples)} COUNTEREXAMPLES"
        lines.append(
            f"{r.name:12} n<={r.max_n}: {r.graphs_checked} graphs,"
            f" {r.instances_checked} instances, {status}"
        )
        for ce in r.counterexamples[:20]:
            lines.append(f"  !! {ce['check']} on {ce['graph6']}: {ce['detail']}")
    _emit(report, args.json, lines)
    return 0 if all(r.ok for r in results) else 1


def _add_input_args(sub) -> None:
    sub.add_argument("input", nargs="?", help="path to a graph file, or '-' for stdin")
    sub.add_argument("--format", choices=("g6", "edge-list"), default="g6")
    sub.add_argument("--fixture", choices=sorted(gio.FIXTURES), help="use a built-in graph")
    sub.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordal-centers",
        description="Center structure of k-chordal graphs: analysis, certificates,"
        " stretched sets, host constructions, and exhaustive verification.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("analyze", help="metrics and chordality of one graph")
    _add_input_args(sub)
    sub.set_defaults(func=_cmd_analyze)

    sub = subs.add_parser("check-center", help="is this the center of a chordal graph?")
    _add_input_args(sub)
    sub.set_defaults(func=_cmd_check_center)

    sub = subs.add_parser("construct-host", help="emit a host graph realising the input as center")
    _add_input_args(sub)
    sub.set_defaults(func=_cmd_construct_host)

    sub = subs.add_parser("stretch", help="build and print a t-stretched diametrical set")
    _add_input_args(sub)
    sub.add_argument("--t", type=int, required=True, help="stretch parameter")
    sub.set_defaults(func=_cmd_stretch)

    sub = subs.add_parser("verify", help="run every applicable theorem clause on one graph")
    _add_input_args(sub)
    sub.set_defaults(func=_cmd_verify)

    sub = subs.add_parser("enumerate", help="exhaustive theorem suites at desk scale")
    sub.add_argument("--max-n", type=int, required=True)
    sub.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=_cmd_enumerate)
    return parser


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TheoremCounterexample as exc:
        g6 = gio.to_graph6(exc.graph) if exc.graph is not None else "?"
        print(f"counterexample: {exc} [graph6 {g6}] {exc.details}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
