"""Command-line front end.

Exit codes: 0 success (including an "unequal" verdict), 1 type, shape or
I/O error, 2 parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .cyclic import atl_to_cyla, lambda_to_cyl, sqrtlambda_to_cyl
from .diagram import Category, eq_in, evaluate, invariants
from .errors import CylError, DimTooSmall, ParseError
from .grammar import parse_word
from .linear import word_matrix
from .normal_form import format_normal_form, normalize
from .render import render_svg
from .selftest import run_all
from .words import eliminate_inverses

# dense export beyond this many entries is refused rather than attempted
MAX_EXPORT_ENTRIES = 4_000_000


class _Fail(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _invariants_json(w) -> str:
    return json.dumps(invariants(evaluate(w)).as_dict())


def cmd_invariants(args) -> str:
    return _invariants_json(parse_word(args.word))


def cmd_eq(args) -> str:
    u, v = parse_word(args.word1), parse_word(args.word2)
    return "equal" if eq_in(Category(args.category), u, v) else "unequal"


def cmd_normalize(args) -> str:
    w = parse_word(args.word)
    return format_normal_form(normalize(w)) + "\n" + json.dumps(invariants(evaluate(eliminate_inverses(w))).as_dict())


def cmd_matrix(args) -> str:
    if args.dim < 1:
        raise DimTooSmall(f"--dim must be at least 1, got {args.dim}")
    w = parse_word(args.word)
    m = word_matrix(w, args.dim)
    if m.rows * m.cols > MAX_EXPORT_ENTRIES:
        raise _Fail(f"matrix is {m.rows}x{m.cols}; dense export is limited to {MAX_EXPORT_ENTRIES} entries", 1)
    table = m.to_strings()
    if args.format == "json":
        text = json.dumps(table)
    else:
        buf = io.StringIO()
        buf.write(f"# shape {m.rows}x{m.cols}\n")
        csv.writer(buf, lineterminator="\n").writerows(table)
        text = buf.getvalue().rstrip("\n")
    return _emit(text, args.output)


def cmd_render(args) -> str:
    w = parse_word(args.word)
    return _emit(render_svg(evaluate(w), title=str(w)).rstrip("\n"), args.output)


def cmd_translate(args) -> str:
    w = parse_word(args.word, args.source)
    if args.source == "atl":
        out, mu = atl_to_cyla(w)
        return f"{out}\nmu={mu}"
    return str(lambda_to_cyl(w) if args.source == "lambda" else sqrtlambda_to_cyl(w))


def cmd_selftest(args) -> tuple[str, int]:
    results = run_all(args.max_arity, args.samples, args.seed)
    lines = []
    for r in results:
        lines.append(r.line())
        lines.extend(f"    {f}" for f in r.failures)
    total = sum(r.passed for r in results)
    bad = sum(r.failed for r in results)
    lines.append(f"total: {total} passed, {bad} failed")
    return "\n".join(lines), 1 if bad else 0


def _emit(text: str, path: str | None) -> str:
    if path is None:
        return text
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    except OSError as e:
        raise _Fail(f"cannot write {path}: {e.strerror or e}", 1) from None
    return ""


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stripedcyl", description="Striped-cylinder word problems and representations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="print the invariant tuple as JSON")
    s.add_argument("word")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("eq", help="decide equality of two words")
    s.add_argument("--category", choices=[c.value for c in Category], default="cyl")
    s.add_argument("word1")
    s.add_argument("word2")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("normalize", help="print the canonical word and invariants")
    s.add_argument("word")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("matrix", help="exact bar-model matrix of a word")
    s.add_argument("word")
    s.add_argument("--dim", type=int, default=2)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_matrix)

    s = sub.add_parser("render", help="draw the evaluated diagram as SVG")
    s.add_argument("word")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("translate", help="translate a cyclic, sqrt-cyclic or Atl word")
    s.add_argument("source", choices=["lambda", "sqrtlambda", "atl"])
    s.add_argument("word")
    s.set_defaults(func=cmd_translate)

    s = sub.add_parser("selftest", help="run the property suites")
    s.add_argument("--max-arity", type=int, default=8)
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except ParseError as e:
        print(f"parse error: {e.render()}", file=sys.stderr)
        return 2
    except _Fail as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except CylError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    out, code = out if isinstance(out, tuple) else (out, 0)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
