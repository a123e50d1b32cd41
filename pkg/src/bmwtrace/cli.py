"""Command-line front end.

Exit codes: 0 success, 1 failed verification, 2 bad input, 3 step budget
exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, List, Optional

from . import tangle
from .bmw import bmw_basis, bmw_reduce, format_bmw_tags, kauffman_poly, kauffman_trace
from .braid import WordParseError, parse_word
from .hecke import format_hecke_tags, hecke_basis, homfly, markov_trace_h, project_from_bmw
from .ring import RingElement
from .skein_oracle import OracleBudgetExceeded, homfly_oracle, kauffman_oracle, reset_budget
from .transverse import basic_trace_hecke, mfw, transverse_trace_bmw, transverse_trace_hecke
from .verify import verify_suite

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 10**7


@dataclass
class CommandResult:
    command: str
    input: Any
    payload: Any
    text: List[str] = field(default_factory=list)
    exit_code: int = EXIT_OK
    format: str = "text"

    def render(self) -> str:
        if self.format == "json":
            return json.dumps({"command": self.command, "input": self.input, "result": self.payload}, sort_keys=True)
        return "\n".join(self.text)


def _ring_payload(x: RingElement) -> dict:
    data = x.to_json()
    data["text"] = str(x)
    return data


def _parse_trace(value: str) -> str:
    if value in ("homfly", "kauffman", "transverse"):
        return value
    if value.startswith("basic="):
        k = value[len("basic="):]
        if k.isdigit() and int(k) >= 1:
            return value
    raise argparse.ArgumentTypeError("expected homfly, kauffman, transverse or basic=<k>")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="maximal number of rewrite steps")

    parser = argparse.ArgumentParser(prog="bmwtrace", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", parents=[common], help="HOMFLY-PT or Kauffman polynomial of a braid closure")
    p.add_argument("--trace", type=_parse_trace, default="homfly")
    p.add_argument("word")

    p = sub.add_parser("trace", parents=[common], help="Markov or transverse trace of a word")
    p.add_argument("--trace", type=_parse_trace, default="kauffman")
    p.add_argument("--hecke", action="store_true", help="evaluate the transverse trace on the Hecke image")
    p.add_argument("word")

    p = sub.add_parser("reduce", parents=[common], help="normal form in the inductive basis")
    p.add_argument("--hecke", action="store_true", help="reduce in the Hecke algebra (e letters map to 0)")
    p.add_argument("word")

    p = sub.add_parser("basis", parents=[common], help="list the inductive basis")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--bmw", type=int, metavar="N")
    group.add_argument("--hecke", type=int, metavar="N")

    p = sub.add_parser("mfw", parents=[common], help="check the MFW-type bounds for a braid")
    p.add_argument("word")

    p = sub.add_parser("verify", parents=[common], help="run the self-check suite")
    p.add_argument("level", nargs="?", choices=["quick", "full"], default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--break-relation", dest="fault", default=None, help="corrupt one relation family (self-test)")

    p = sub.add_parser("oracle", parents=[common], help="skein-recursion reference value")
    p.add_argument("--trace", choices=["homfly", "kauffman"], default="homfly")
    p.add_argument("word")
    return parser


def _polynomial(command: str, args, value: RingElement) -> CommandResult:
    return CommandResult(command, {"word": args.word, "trace": args.trace}, _ring_payload(value), [str(value)])


def _run(args) -> CommandResult:
    cmd = args.command
    if cmd == "basis":
        if args.bmw is not None:
            if args.bmw < 1:
                raise WordParseError("strand count must be at least 1")
            words = [format_bmw_tags(t) for t in bmw_basis(args.bmw)]
            return CommandResult(cmd, {"bmw": args.bmw}, {"count": len(words), "words": words}, words)
        if args.hecke < 1:
            raise WordParseError("strand count must be at least 1")
        words = [format_hecke_tags(t) for t in hecke_basis(args.hecke)]
        return CommandResult(cmd, {"hecke": args.hecke}, {"count": len(words), "words": words}, words)

    if cmd == "verify":
        results = verify_suite(args.level, seed=args.seed, fault=args.fault)
        ok = all(r.passed for r in results)
        lines = []
        for r in results:
            lines.append(r.line())
            lines.extend("  " + f for f in r.failures)
        payload = {
            "passed": ok,
            "checks": [{"name": r.name, "passed": r.passed, "checked": r.checked, "failures": r.failures} for r in results],
        }
        return CommandResult(cmd, {"level": args.level}, payload, lines, EXIT_OK if ok else EXIT_VERIFY)

    word = parse_word(args.word)
    if cmd == "invariant":
        if not word.is_braid:
            raise WordParseError("invariants are defined for braid words")
        if args.trace == "homfly":
            return _polynomial(cmd, args, homfly(word))
        if args.trace == "kauffman":
            return _polynomial(cmd, args, kauffman_poly(word))
        raise WordParseError("invariant takes --trace homfly or kauffman")
    if cmd == "oracle":
        if not word.is_braid:
            raise WordParseError("the oracle takes braid words")
        value = homfly_oracle(word) if args.trace == "homfly" else kauffman_oracle(word)
        return _polynomial(cmd, args, value)
    if cmd == "trace":
        if args.trace == "homfly":
            return _polynomial(cmd, args, markov_trace_h(project_from_bmw(word)))
        if args.trace == "kauffman":
            return _polynomial(cmd, args, kauffman_trace(bmw_reduce(word)))
        if args.trace == "transverse":
            form = transverse_trace_hecke(project_from_bmw(word)) if args.hecke else transverse_trace_bmw(word)
            return CommandResult(cmd, {"word": args.word, "trace": args.trace}, form.to_json(), [str(form)])
        k = int(args.trace.split("=")[1])
        return _polynomial(cmd, args, basic_trace_hecke(k, project_from_bmw(word)))
    if cmd == "reduce":
        x = project_from_bmw(word) if args.hecke else bmw_reduce(word)
        fmt = format_hecke_tags if args.hecke else format_bmw_tags
        terms = [{"word": fmt(k), "coeff": _ring_payload(c)} for k, c in x.items()]
        lines = [f"{fmt(k)}\t{c}" for k, c in x.items()] or ["0"]
        return CommandResult(cmd, {"word": args.word, "algebra": "hecke" if args.hecke else "bmw"}, terms, lines)
    if cmd == "mfw":
        if not word.is_braid:
            raise WordParseError("mfw takes braid words")
        report = mfw(word)
        data = report.to_json()
        d = data["d"]
        lines = [
            f"writhe {report.writhe}, index {report.index}, self-linking {report.writhe - report.index}",
            f"d = {d}" + "".join(f", d^({k}) = {v}" for k, v in report.per_k),
            f"-i <= d: {'holds' if report.holds else 'VIOLATED'}",
            f"w - i <= -deg_a P = {report.corollary_bound}: {'holds' if report.corollary_holds else 'VIOLATED'}",
        ]
        code = EXIT_OK if report.holds and report.corollary_holds else EXIT_VERIFY
        return CommandResult(cmd, {"word": args.word}, data, lines, code)
    raise WordParseError(f"unknown command {cmd}")


def run(argv: Optional[List[str]] = None) -> CommandResult:
    """Parse argv, dispatch, and return the result (errors become results too)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    # the self-check suite is a fixed workload: only an explicit --budget limits it
    budget = getattr(args, "budget", None if args.command == "verify" else DEFAULT_BUDGET)
    tangle.BUDGET.limit = budget
    tangle.BUDGET.used = 0
    reset_budget(budget if budget is not None else DEFAULT_BUDGET * 10)
    try:
        result = _run(args)
    except (WordParseError, ValueError) as exc:
        result = CommandResult(args.command, None, {"error": str(exc)}, [f"error: {exc}"], EXIT_PARSE)
    except (tangle.BudgetExceeded, OracleBudgetExceeded) as exc:
        result = CommandResult(args.command, None, {"error": str(exc)}, [f"error: {exc}"], EXIT_BUDGET)
    finally:
        tangle.BUDGET.limit = None
        reset_budget()
    result.format = fmt
    return result


def main(argv: Optional[List[str]] = None) -> int:
    try:
        result = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    failed = result.exit_code in (EXIT_PARSE, EXIT_BUDGET)
    stream = sys.stderr if failed and result.format == "text" else sys.stdout
    print(result.render(), file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
