"""``weld`` command-line interface.

Exit codes: 0 success (also NotDistinguished, path found); 3 distinguished
(any flavour) or search NotFound; 2 usage, parse or validation error; 1 a
self-check (``corpus verify`` excepted) that did not hold.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Sequence

from . import __version__
from .codec import GaussCode, GaussCodeError, Symmetry, canonical, parse, symmetry
from .corpus import CORPUS, lookup
from .invariants.algebra import AlgebraError, builtin_group, builtin_quandle
from .invariants.battery import (
    DEFAULT_GROUPS,
    DEFAULT_QUANDLES,
    Level,
    Palette,
    battery,
    first_difference,
)
from .invariants.fox import alexander
from .knotgroup import wirtinger
from .moves import MoveKind, MovePath, NotFound, SearchBudget, search
from .spun import Outcome, Verdict, non_injectivity_witness, spun_compare, welded_compare

SCHEMA = "weldknot-report/1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DISTINGUISHED = 3


class UsageError(Exception):
    pass


def _code(text: str) -> GaussCode:
    """A Gauss code, or the name of a corpus knot."""
    if text in CORPUS:
        return CORPUS[text].code
    return parse(text)


def _names(text: str | None, default: Sequence[str]) -> tuple[str, ...]:
    if text is None:
        return tuple(default)
    return tuple(x.strip() for x in text.split(",") if x.strip())


def _palette(args: argparse.Namespace) -> Palette:
    palette = Palette(_names(args.groups, DEFAULT_GROUPS), _names(args.quandles, DEFAULT_QUANDLES))
    for g in palette.groups:
        builtin_group(g)
    for q in palette.quandles:
        builtin_quandle(q)
    return palette


def _code_echo(code: GaussCode) -> dict:
    return {"code": str(code), "canonical": str(canonical(code)), "crossings": code.crossing_count}


def _verdict_exit(v: Verdict) -> int:
    return EXIT_DISTINGUISHED if v.outcome.distinguished else EXIT_OK


# -- subcommands ------------------------------------------------------------


def cmd_validate(args) -> tuple[int, dict]:
    code = _code(args.code)
    return EXIT_OK, {"valid": True, **_code_echo(code)}


def cmd_symmetry(args) -> tuple[int, dict]:
    code = _code(args.code)
    out = symmetry(code, Symmetry(args.op))
    return EXIT_OK, {"op": args.op, "result": str(out), "canonical": str(canonical(out))}


def cmd_invariants(args) -> tuple[int, dict]:
    code = _code(args.code)
    b = battery(code, Level(args.level), _palette(args))
    return EXIT_OK, {"battery": b.to_json()}


def cmd_compare(args) -> tuple[int, dict]:
    k1, k2 = _code(args.code1), _code(args.code2)
    palette = _palette(args)
    level = Level(args.level)
    if level is Level.TUBE:
        verdict = spun_compare(k1, k2, palette)
    elif level is Level.WELDED:
        flags = tuple(
            args.classical or bool((e := lookup(k)) and e.classical_origin) for k in (k1, k2)
        )
        verdict = welded_compare(k1, k2, flags, palette)
    else:
        diff = first_difference(battery(k1, level, palette), battery(k2, level, palette))
        verdict = Verdict(Outcome.DISTINGUISHED, diff) if diff else Verdict(Outcome.NOT_DISTINGUISHED)
    return _verdict_exit(verdict), {"level": level.value, "verdict": verdict.to_json()}


def cmd_search(args) -> tuple[int, dict]:
    a, b = _code(args.code1), _code(args.code2)
    kinds = tuple(MoveKind(k) for k in _names(args.kinds, [k.value for k in MoveKind]))
    budget = SearchBudget(args.depth, args.max_states, kinds, args.max_crossings)
    result = search(a, b, budget)
    if isinstance(result, NotFound):
        return EXIT_DISTINGUISHED, {"search": result.to_json()}
    assert isinstance(result, MovePath)
    end = result.end()
    return EXIT_OK, {
        "search": {
            "found": True,
            "length": len(result),
            "steps": result.to_json(),
            "end": str(end),
            "end_canonical": str(canonical(end)),
        }
    }


def cmd_corpus(args) -> tuple[int, dict]:
    rows = []
    ok = True
    for name, entry in CORPUS.items():
        row: dict[str, Any] = {
            "name": name,
            "code": str(entry.code),
            "classical_origin": entry.classical_origin,
            "chiral_classical": entry.chiral_classical,
            "expected_alexander": entry.expected_alexander.to_json(),
        }
        if args.action == "verify":
            got = alexander(wirtinger(entry.code))
            row["computed_alexander"] = got.to_json()
            row["match"] = got == entry.expected_alexander
            ok &= row["match"]
        rows.append(row)
    return (EXIT_OK if ok else EXIT_USAGE), {"action": args.action, "entries": rows, "all_match": ok}


def cmd_thm8_demo(args) -> tuple[int, dict]:
    code = _code(args.code)
    evidence = non_injectivity_witness(code, _palette(args))
    return (EXIT_OK if evidence["holds"] else EXIT_CHECK_FAILED), {"evidence": evidence}


# -- plumbing ---------------------------------------------------------------


def _add_palette(p: argparse.ArgumentParser) -> None:
    p.add_argument("--groups", help=f"comma-separated groups (default {','.join(DEFAULT_GROUPS)})")
    p.add_argument("--quandles", help=f"comma-separated quandles (default {','.join(DEFAULT_QUANDLES)})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weld", description="Welded knot invariants and Tube certificates.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kw) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kw)

    p = add("validate", help="check a Gauss code")
    p.add_argument("code")
    p.set_defaults(func=cmd_validate)

    p = add("symmetry", help="apply reverse, mirror or vertical reflection")
    p.add_argument("code")
    p.add_argument("--op", required=True, choices=[s.value for s in Symmetry])
    p.set_defaults(func=cmd_symmetry)

    p = add("invariants", help="compute an invariant battery")
    p.add_argument("code")
    p.add_argument("--level", default="welded", choices=[lv.value for lv in Level])
    _add_palette(p)
    p.set_defaults(func=cmd_invariants)

    p = add("compare", help="compare two diagrams at a battery level")
    p.add_argument("code1")
    p.add_argument("code2")
    p.add_argument("--level", default="welded", choices=[lv.value for lv in Level])
    p.add_argument("--classical", action="store_true", help="both inputs are classical diagrams")
    _add_palette(p)
    p.set_defaults(func=cmd_compare)

    p = add("search", help="bounded breadth-first search for a move sequence")
    p.add_argument("code1")
    p.add_argument("code2")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--max-states", type=int, default=10_000)
    p.add_argument("--max-crossings", type=int, default=None)
    p.add_argument("--kinds", help="comma-separated move kinds (default: all)")
    p.set_defaults(func=cmd_search)

    p = add("corpus", help="list or verify the built-in corpus")
    p.add_argument("action", choices=["list", "verify"])
    p.set_defaults(func=cmd_corpus)

    p = add("thm8-demo", help="show a welded knot pair with equal Tube images")
    p.add_argument("code", nargs="?", default="3_1")
    _add_palette(p)
    p.set_defaults(func=cmd_thm8_demo)
    return parser


def _inputs(args: argparse.Namespace) -> dict:
    out = {}
    for key in ("code", "code1", "code2"):
        text = getattr(args, key, None)
        if text is not None:
            out[key] = _code_echo(_code(text))
    return out


def _render_text(report: dict) -> str:
    lines = [f"weld {report['command']}"]
    for key, echo in report["inputs"].items():
        lines.append(f"  {key}: {echo['code'] or '(unknot)'}  [{echo['crossings']} crossings]")
    lines.extend(_flatten(report["results"], indent=2))
    return "\n".join(lines)


def _flatten(obj: Any, indent: int) -> list[str]:
    pad = " " * indent
    out = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _is_scalar_list(v):
                out.append(f"{pad}{k}:")
                out.extend(_flatten(v, indent + 2))
            else:
                out.append(f"{pad}{k}: {json.dumps(v) if isinstance(v, list) else v}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict):
                out.append(f"{pad}-")
                out.extend(_flatten(item, indent + 2))
            else:
                out.append(f"{pad}- {json.dumps(item)}")
    return out


def _is_scalar_list(v: Any) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def run(argv: Sequence[str] | None = None) -> tuple[int, dict | None, str]:
    """Execute a command line; returns ``(exit code, report, rendered text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None, ""
    started = time.perf_counter()
    try:
        inputs = _inputs(args)
        code, results = args.func(args)
    except (GaussCodeError, AlgebraError, UsageError, ValueError) as exc:
        report = {
            "schema": SCHEMA,
            "command": args.command,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        text = json.dumps(report, indent=2) if args.json else f"error: {type(exc).__name__}: {exc}"
        return EXIT_USAGE, report, text
    palette_version = Palette().version
    if hasattr(args, "groups"):
        palette_version = _palette(args).version
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "inputs": inputs,
        "palette_version": palette_version,
        "exit_code": code,
        "results": results,
    }
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    text = json.dumps(report, indent=2) if args.json else _render_text(report)
    return code, report, text


def main(argv: Sequence[str] | None = None) -> int:
    code, _, text = run(argv)
    if text:
        stream = sys.stderr if code == EXIT_USAGE and not text.startswith("{") else sys.stdout
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
