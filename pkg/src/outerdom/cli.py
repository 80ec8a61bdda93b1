"""Command line entry point.

Exit codes: 0 ok, 1 a mathematical violation (a would-be counterexample),
2 an operational error (bad file, malformed input, sizes out of range).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .enumeration import (
    lower_bound,
    verify_lemma1,
    verify_lower_bound,
    verify_thm2_equivalence,
)
from .extremal import build_extremal, detect_extremal_structural, partition_profile
from .formats import format_edgelist, graph6_str, read_graph
from .graph import GraphError, VertexSet
from .outerplanarity import find_forbidden_subdivision, is_outerplanar
from .secure import first_undefended, is_dominating, is_secure_dominating
from .solver import gamma, gamma_s

EXIT = {"ok": 0, "violation": 1, "error": 2}


@dataclass
class CommandResult:
    status: str
    payload: dict
    text: str = ""

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]

    def to_json(self) -> str:
        return json.dumps({"status": self.status, **self.payload}, sort_keys=True)


def _parse_set(text: str) -> VertexSet:
    try:
        return VertexSet.of(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise GraphError(f"--set expects comma-separated vertex indices, got {text!r}") from None


def _cmd_solve(args) -> CommandResult:
    g = read_graph(args.file)
    res = gamma(g) if args.variant == "gamma" else gamma_s(g)
    payload = {"variant": args.variant, "n": g.n, **res.to_json()}
    return CommandResult("ok", payload, f"{args.variant} = {res.value}, set = {res.certificate.sorted()}")


def _cmd_check(args) -> CommandResult:
    g = read_graph(args.file)
    s = _parse_set(args.set)
    g.check_subset(s)
    payload: dict = {"variant": args.variant, "set": s.sorted()}
    if args.variant == "dominating":
        verdict = is_dominating(g, s)
        payload["verdict"] = verdict
        if not verdict:
            payload["first_failing"] = first_undefended(g, s)
    else:
        cert = is_secure_dominating(g, s)
        payload["verdict"] = cert is not None
        if cert is not None:
            payload["certificate"] = cert.to_json()
        else:
            payload["first_failing"] = first_undefended(g, s)
    word = "yes" if payload["verdict"] else f"no (vertex {payload.get('first_failing')})"
    return CommandResult("ok", payload, f"{args.variant}: {word}")


def _cmd_outerplanar(args) -> CommandResult:
    g = read_graph(args.file)
    verdict = is_outerplanar(g)
    payload: dict = {"outerplanar": verdict}
    if args.witness and not verdict:
        w = find_forbidden_subdivision(g)
        if w is None:
            return CommandResult("violation", {**payload, "witness": None},
                                 "planarity test and subdivision search disagree")
        payload["witness"] = w.to_json()
    return CommandResult("ok", payload, f"outerplanar: {verdict}")


def _cmd_gen_extremal(args) -> CommandResult:
    g, w = build_extremal(args.k)
    body = graph6_str(g) + "\n" if args.format == "graph6" else format_edgelist(g)
    payload = {"k": args.k, "n": g.n, "m": g.m, "format": args.format, "witness": w.to_json()}
    if args.output:
        Path(args.output).write_text(body)
        payload["output"] = args.output
    else:
        payload["graph"] = body
    return CommandResult("ok", payload, body + json.dumps(w.to_json()))


def _cmd_characterize(args) -> CommandResult:
    g = read_graph(args.file)
    if g.n < 11 or (g.n - 1) % 5:
        raise GraphError(f"characterize needs n = 5k+1 with k >= 2, got n = {g.n}")
    outer = is_outerplanar(g)
    res = gamma_s(g, use_outerplanar_bound=False)
    bound = lower_bound(g.n)
    w = detect_extremal_structural(g)
    payload = {
        "n": g.n, "k": (g.n - 1) // 5, "outerplanar": outer, "gamma_s": res.value,
        "bound": bound, "witness": w.to_json() if w else "none",
        "certificate": res.secure.to_json(),
    }
    status = "ok"
    if outer:
        payload["profile"] = partition_profile(g, res.certificate).to_json()
        if res.value < bound or (res.value == bound) != (w is not None):
            status = "violation"
    text = f"gamma_s = {res.value}, bound = {bound}, witness = {'yes' if w else 'none'}"
    return CommandResult(status, payload, text)


def _sweep_result(report) -> CommandResult:
    status = "ok" if report.ok else "violation"
    return CommandResult(status, report.to_json(), report.table())


def _cmd_verify_bound(args) -> CommandResult:
    if args.emit_graph6:
        with open(args.emit_graph6, "w") as fh:
            report = verify_lower_bound(args.max_n, jobs=args.jobs, emit=fh)
    else:
        report = verify_lower_bound(args.max_n, jobs=args.jobs)
    return _sweep_result(report)


def _cmd_verify_lemma1(args) -> CommandResult:
    return _sweep_result(verify_lemma1(args.max_n))


def _cmd_verify_thm2(args) -> CommandResult:
    return _sweep_result(verify_thm2_equivalence(args.max_n, args.criterion, args.secure_only))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="outerdom", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="print the JSON payload")
    sub = parser.add_subparsers(dest="command", required=True)
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print the JSON payload")

    p = sub.add_parser("solve", parents=[shared], help="exact gamma or gamma_s with certificate")
    p.add_argument("file")
    p.add_argument("--variant", choices=["gamma", "gamma-s"], default="gamma-s")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", parents=[shared], help="test a vertex set")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="0-based, comma-separated")
    p.add_argument("--variant", choices=["dominating", "secure"], default="secure")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("outerplanar", parents=[shared], help="decide outerplanarity")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true", help="report a K4/K2,3 subdivision")
    p.set_defaults(func=_cmd_outerplanar)

    p = sub.add_parser("gen-extremal", parents=[shared], help="emit G_k and its labeling")
    p.add_argument("k", type=int)
    p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen_extremal)

    p = sub.add_parser("characterize", parents=[shared], help="gamma_s, bound and G_k witness for n = 5k+1")
    p.add_argument("file")
    p.set_defaults(func=_cmd_characterize)

    p = sub.add_parser("verify-bound", parents=[shared], help="lower-bound sweep over connected outerplanar graphs")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--emit-graph6")
    p.set_defaults(func=_cmd_verify_bound)

    p = sub.add_parser("verify-lemma1", parents=[shared], help="bipartite outerplanar counting sweep")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(func=_cmd_verify_lemma1)

    p = sub.add_parser("verify-thm2", parents=[shared], help="defense criterion agreement sweep")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--criterion", choices=["clique", "cover"], default="clique")
    p.add_argument("--secure-only", action="store_true")
    p.set_defaults(func=_cmd_verify_thm2)
    return parser


def _dispatch(args: argparse.Namespace) -> CommandResult:
    try:
        return args.func(args)
    except OSError as exc:
        return CommandResult("error", {"message": f"cannot read input: {exc}"}, f"error: {exc}")
    except (GraphError, ValueError) as exc:
        return CommandResult("error", {"message": str(exc)}, f"error: {exc}")


def run(argv: list[str] | None = None) -> CommandResult:
    return _dispatch(build_parser().parse_args(argv))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    result = _dispatch(args)
    stream = sys.stderr if result.status == "error" and not args.json else sys.stdout
    print(result.to_json() if args.json else result.text, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
