"""Command-line front end.

Exit codes: 0 success, 1 claim violated, 2 bad input or usage,
3 genericity failure, 4 resource guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from .complex import SimplicialComplex, alexander_dual, f_vector, link
from .corpus import CorpusSpec
from .ekr import DEFAULT_BUDGET, mixed_star_check, is_r_ekr, is_strict_r_ekr
from .errors import DomainError, GenericityError, InputError, ResourceError
from .gf import DEFAULT_PRIME
from .graphs import independence_complex, is_chordal, is_cochordal, lex_bfs
from .harness import CLAIMS, FAIL, SKIPPED, read_reports, replay, run_campaign, summarize
from .homology import depth, is_cohen_macaulay, is_sequentially_cm, reduced_betti
from .io import format_cplx, read_complex, read_graph
from .shifting import ShiftConfig, exterior_shift

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_GENERICITY, EXIT_RESOURCE = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(args: argparse.Namespace, text: str, payload: Any) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _facet_lines(cx: SimplicialComplex) -> str:
    if cx.is_void:
        return "(void)"
    return "\n".join(" ".join(map(str, f)) or "{}" for f in sorted(cx.facet_list()))


def _cfg(args: argparse.Namespace) -> ShiftConfig:
    return ShiftConfig(prime=args.prime, seed=args.seed)


def _complex_payload(cx: SimplicialComplex) -> dict[str, Any]:
    return {"n": cx.n, "facets": [list(f) for f in cx.facet_list()]}


def cmd_shift(args: argparse.Namespace) -> int:
    res = exterior_shift(read_complex(args.input), _cfg(args))
    payload = _complex_payload(res.shifted) | {"retries": res.retries_used}
    _emit(args, _facet_lines(res.shifted), payload)
    return EXIT_OK


def cmd_fvector(args: argparse.Namespace) -> int:
    fv = f_vector(read_complex(args.input))
    _emit(args, " ".join(map(str, fv)), {"f_vector": list(fv)})
    return EXIT_OK


def cmd_link(args: argparse.Namespace) -> int:
    lk = link(read_complex(args.input), args.face)
    _emit(args, _facet_lines(lk), _complex_payload(lk))
    return EXIT_OK


def cmd_dual(args: argparse.Namespace) -> int:
    dual = alexander_dual(read_complex(args.input))
    if args.format == "json":
        _emit(args, "", _complex_payload(dual))
    else:
        print(format_cplx(dual), end="")
    return EXIT_OK


def cmd_homology(args: argparse.Namespace) -> int:
    betti = reduced_betti(read_complex(args.input), args.prime)
    text = "\n".join(f"H~_{i}: {b}" for i, b in enumerate(betti.dims, -1))
    _emit(args, text, {"reduced_betti": {str(i): b for i, b in enumerate(betti.dims, -1)}})
    return EXIT_OK


def cmd_depth(args: argparse.Namespace) -> int:
    rep = depth(read_complex(args.input), args.prime, args.method, _cfg(args))
    _emit(args, str(rep.depth), {"depth": rep.depth, "method": rep.method})
    return EXIT_OK


def cmd_cm(args: argparse.Namespace) -> int:
    cx = read_complex(args.input)
    if args.sequential:
        holds = is_sequentially_cm(cx, args.prime)
        witness = None
    else:
        res = is_cohen_macaulay(cx, args.prime)
        holds, witness = res.holds, res.witness
    text = "true" if holds else f"false (witness {witness})" if witness else "false"
    _emit(args, text, {"cohen_macaulay": holds, "witness": witness})
    return EXIT_OK


def cmd_graph_ic(args: argparse.Namespace) -> int:
    ic = independence_complex(read_graph(args.input))
    if args.format == "json":
        _emit(args, "", _complex_payload(ic))
    else:
        print(format_cplx(ic), end="")
    return EXIT_OK


def cmd_graph_chordal(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    chordal, cochordal = is_chordal(g), is_cochordal(g)
    text = f"chordal: {str(chordal).lower()}\nco-chordal: {str(cochordal).lower()}"
    _emit(args, text, {"chordal": chordal, "cochordal": cochordal, "lexbfs": lex_bfs(g)})
    return EXIT_OK


def _family_text(family: tuple[tuple[int, ...], ...]) -> str:
    return " | ".join(" ".join(map(str, f)) for f in family)


def cmd_check_ekr(args: argparse.Namespace) -> int:
    v = is_r_ekr(read_complex(args.input), args.r, args.t, args.budget)
    text = (
        f"r={v.r} t={v.t} star={v.star_bound} (vertex {v.best_star_vertex}) "
        f"max_family={v.max_family_size} ekr={str(v.is_ekr).lower()}"
    )
    if not v.is_ekr:
        text += f"\nwitness: {_family_text(v.witness)}"
    payload = {
        "r": v.r,
        "t": v.t,
        "star_bound": v.star_bound,
        "best_star_vertex": v.best_star_vertex,
        "max_family_size": v.max_family_size,
        "is_ekr": v.is_ekr,
        "witness": [list(f) for f in v.witness],
    }
    _emit(args, text, payload)
    return EXIT_OK if v.is_ekr else EXIT_VIOLATED


def cmd_check_strict(args: argparse.Namespace) -> int:
    res = is_strict_r_ekr(read_complex(args.input), args.r, args.budget)
    text = f"r={args.r} max_family={res.max_family_size} strict={str(res.strict).lower()}"
    if res.witness:
        text += f"\nnon-star maximum family: {_family_text(res.witness)}"
    payload = {
        "r": args.r,
        "strict": res.strict,
        "max_family_size": res.max_family_size,
        "families_checked": res.families_checked,
        "witness": [list(f) for f in res.witness or ()],
    }
    _emit(args, text, payload)
    return EXIT_OK if res.strict else EXIT_VIOLATED


def cmd_check_mixed_star(args: argparse.Namespace) -> int:
    res = mixed_star_check(read_complex(args.input))
    text = f"star={res.star_size} (vertex {res.star_vertex}) max_family={res.max_family_size} holds={str(res.holds).lower()}"
    payload = {
        "holds": res.holds,
        "star_size": res.star_size,
        "star_vertex": res.star_vertex,
        "max_family_size": res.max_family_size,
        "witness": [list(f) for f in res.witness],
    }
    _emit(args, text, payload)
    return EXIT_OK if res.holds else EXIT_VIOLATED


def cmd_corpus(args: argparse.Namespace) -> int:
    if args.claim not in CLAIMS:
        raise InputError(f"unknown claim {args.claim!r}; known: {', '.join(sorted(CLAIMS))}")
    spec = CorpusSpec.parse(args.family)
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    genericity = resource = False
    for rep in run_campaign(args.claim, spec, _cfg(args), args.out, args.workers):
        counts[rep.verdict] += 1
        if rep.verdict == SKIPPED and rep.reason:
            genericity |= rep.reason.startswith("genericity")
            resource |= rep.reason.startswith("resource")
        if args.out is None:
            print(rep.to_json())
        elif rep.verdict == FAIL and args.format == "text":
            print(f"FAIL {rep.instance['source']} {rep.params}: {rep.reason}", file=sys.stderr)
    _emit(args, f"{args.claim}: pass={counts['pass']} fail={counts['fail']} skipped={counts['skipped']}", counts)
    if counts["fail"]:
        return EXIT_VIOLATED
    if genericity:
        return EXIT_GENERICITY
    return EXIT_RESOURCE if resource and args.strict_resources else EXIT_OK


def cmd_summary(args: argparse.Namespace) -> int:
    table = summarize(r for path in args.logs for r in read_reports(path))
    if args.format == "json":
        print(json.dumps({k: dict(v) for k, v in sorted(table.items())}, sort_keys=True))
    else:
        for claim, c in sorted(table.items()):
            print(f"{claim:22s} pass={c['pass']} fail={c['fail']} skipped={c['skipped']}")
    return EXIT_VIOLATED if any(c["fail"] for c in table.values()) else EXIT_OK


def cmd_replay(args: argparse.Namespace) -> int:
    bad = 0
    total = 0
    for rec in read_reports(args.log):
        if args.failures_only and rec["verdict"] != FAIL:
            continue
        total += 1
        if not replay(rec):
            bad += 1
            print(f"not reproduced: {rec['claim_id']} {rec['instance']['source']} {rec['params']}", file=sys.stderr)
    _emit(args, f"replayed {total}, reproduced {total - bad}", {"replayed": total, "reproduced": total - bad})
    return EXIT_OK if bad == 0 else EXIT_VIOLATED


def build_parser() -> argparse.ArgumentParser:
    def global_flags(inner: bool) -> argparse.ArgumentParser:
        # flags repeated on subcommands must not reset values given before them
        dflt = (lambda v: argparse.SUPPRESS) if inner else (lambda v: v)
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument(
            "--prime",
            type=int,
            default=dflt(int(os.environ.get("EKR_PRIME", DEFAULT_PRIME))),
            help="field characteristic for shifting and homology (env EKR_PRIME; default 2147483647)",
        )
        p.add_argument("--seed", type=int, default=dflt(0), help="seed for the generic matrix (default 0)")
        p.add_argument("--format", choices=("text", "json"), default=dflt("text"), help="output format (default text)")
        return p

    common = global_flags(inner=True)
    parser = _Parser(prog="ekrcomplex", description=__doc__, parents=[global_flags(inner=False)], formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p: argparse.ArgumentParser, what: str = ".cplx complex") -> argparse.ArgumentParser:
        p.add_argument("--in", dest="input", required=True, metavar="FILE", help=f"input {what}")
        return p

    p = with_input(sub.add_parser("shift", parents=[common], help="exterior algebraic shift"))
    p.set_defaults(func=cmd_shift)
    p = with_input(sub.add_parser("fvector", parents=[common], help="face counts by cardinality"))
    p.set_defaults(func=cmd_fvector)
    p = with_input(sub.add_parser("link", parents=[common], help="link of a face"))
    p.add_argument("face", type=int, nargs="*", help="vertices of the face (none for the empty face)")
    p.set_defaults(func=cmd_link)
    p = with_input(sub.add_parser("dual", parents=[common], help="Alexander dual"))
    p.set_defaults(func=cmd_dual)
    p = with_input(sub.add_parser("homology", parents=[common], help="reduced Betti numbers"))
    p.set_defaults(func=cmd_homology)
    p = with_input(sub.add_parser("depth", parents=[common], help="depth over the chosen field"))
    p.add_argument("--method", choices=("links", "shift"), default="links")
    p.set_defaults(func=cmd_depth)
    p = with_input(sub.add_parser("cm", parents=[common], help="Cohen-Macaulay test"))
    p.add_argument("--sequential", action="store_true", help="test sequential Cohen-Macaulayness instead")
    p.set_defaults(func=cmd_cm)

    graph = sub.add_parser("graph", help="graph operations").add_subparsers(dest="graph_command", required=True, parser_class=_Parser)
    p = with_input(graph.add_parser("ic", parents=[common], help="independence complex"), "DIMACS graph")
    p.set_defaults(func=cmd_graph_ic)
    p = with_input(graph.add_parser("chordal", parents=[common], help="chordality and co-chordality"), "DIMACS graph")
    p.set_defaults(func=cmd_graph_chordal)

    check = sub.add_parser("check", help="intersecting-family checks").add_subparsers(dest="check_command", required=True, parser_class=_Parser)
    p = with_input(check.add_parser("ekr", parents=[common], help="is the complex r-EKR"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, default=1, help="required intersection size (default 1)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of r-faces")
    p.set_defaults(func=cmd_check_ekr)
    p = with_input(check.add_parser("strict", parents=[common], help="is the complex strictly r-EKR"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of r-faces")
    p.set_defaults(func=cmd_check_strict)
    p = with_input(check.add_parser("mixed-star", aliases=["chvatal"], parents=[common], help="mixed-cardinality star bound"))
    p.set_defaults(func=cmd_check_mixed_star)

    p = sub.add_parser("corpus", parents=[common], help="run one claim over a corpus")
    p.add_argument("claim", help=f"one of: {', '.join(sorted(CLAIMS))}")
    p.add_argument("--family", required=True, help="corpus string, e.g. graphs-with-isolated:5")
    p.add_argument("--out", help="JSONL log; existing records are kept and their instances skipped")
    p.add_argument(
        "--workers",
        type=int,
        default=None,
        help="worker processes (env EKR_WORKERS; default 1)",
    )
    p.add_argument("--strict-resources", action="store_true", help="exit 4 when any instance hit a resource guard")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("summary", parents=[common], help="pass/fail/skip counts per claim")
    p.add_argument("logs", nargs="+", metavar="LOG")
    p.set_defaults(func=cmd_summary)

    p = sub.add_parser("replay", parents=[common], help="re-validate logged records standalone")
    p.add_argument("log", metavar="LOG")
    p.add_argument("--failures-only", action="store_true")
    p.set_defaults(func=cmd_replay)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError, FileNotFoundError, IsADirectoryError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenericityError as exc:
        print(f"genericity failure: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except ResourceError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
