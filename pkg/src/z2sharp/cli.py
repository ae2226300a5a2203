"""Command-line front end.

Exit status: 0 on success or a designated verdict, 1 when a check fails or
a verdict is not designated, 2 on usage, parse or input errors. Results go
to stdout and diagnostics to stderr; ``--json`` output uses sorted keys so
identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .axioms import check_group
from .diagonal import berry, richard
from .errors import AllDefined, NoFixpoint, Z2Error
from .model import (
    Assignment, canonical_structure, classify, evaluate, load_structure, solve_comprehension,
)
from .numbers import ParaNat, eval_rat_expr, read_digit_file, real_compare
from .syntax import godel_number, parse, parse_flavor, print_formula, serialize
from .syntax.godel import ALPHABET
from .truth import is_designated, render

OK, FAILED, USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _emit(args, data: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(data, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def ast_dict(node) -> dict:
    """A JSON-ready rendering of an AST node."""
    out: dict = {"node": type(node).__name__}
    for name in node.__dataclass_fields__:
        value = getattr(node, name)
        if hasattr(value, "__dataclass_fields__") and not hasattr(value, "kind"):
            out[name] = ast_dict(value)
        elif hasattr(value, "kind"):
            out[name] = str(value)
        else:
            out[name] = value
    return out


def ast_tree(node, indent: int = 0) -> str:
    pad = "  " * indent
    fields = node.__dataclass_fields__
    leaves = []
    children = []
    for name in fields:
        value = getattr(node, name)
        if hasattr(value, "__dataclass_fields__") and not hasattr(value, "kind"):
            children.append(value)
        else:
            leaves.append(str(value))
    head = f"{pad}{type(node).__name__}" + (f"({', '.join(leaves)})" if leaves else "")
    return "\n".join([head] + [ast_tree(c, indent + 1) for c in children])


def _structure(args):
    if args.model:
        return load_structure(args.model)
    return canonical_structure(args.bound, args.max_rank)


_ELEMENT_RE = re.compile(r"(\d+)_(.+)")


def _parse_element(text: str) -> ParaNat:
    m = _ELEMENT_RE.fullmatch(text.strip())
    if not m:
        raise _UsageError(f"malformed element {text!r}; write e.g. 3_w(1)")
    return ParaNat(int(m.group(1)), parse_flavor(m.group(2)))


def cmd_parse(args) -> int:
    f = parse(args.formula)
    _emit(args, {"ast": ast_dict(f), "formula": print_formula(f)},
          f"{print_formula(f)}\n{ast_tree(f)}")
    return OK


def cmd_godel(args) -> int:
    f = parse(args.formula)
    code = godel_number(f)
    syms = [ALPHABET[i] for i in serialize(f)]
    _emit(args, {"code": code, "formula": print_formula(f), "symbols": syms},
          f"{code}\n{' '.join(syms)}")
    return OK


def cmd_eval(args) -> int:
    s = _structure(args)
    f = parse(args.formula)
    nums = {}
    for item in args.let or []:
        name, _, value = item.partition("=")
        nums[name.strip()] = _parse_element(value)
    v = evaluate(s, Assignment(nums, {}), f)
    _emit(args, {"designated": is_designated(v), "formula": print_formula(f), "value": render(v)},
          render(v))
    return OK if is_designated(v) else FAILED


def cmd_axioms(args) -> int:
    s = _structure(args)
    report = check_group(s, args.group, samples=args.samples, rank=args.rank, raise_on_failure=False)
    _emit(args, report.as_dict(), report.summary())
    return OK if report.passed else FAILED


def cmd_comprehend(args) -> int:
    s = _structure(args)
    phi = parse(args.formula)
    table = solve_comprehension(s, phi, args.scheme, set_var=args.set_var, rank=args.rank)
    cls = classify(s, table)
    entries = {str(e): render(v) for e, v in table.entries}
    lines = [f"classification: {cls}"] + [f"{e}: {v}" for e, v in entries.items()]
    _emit(args, {"classification": str(cls), "entries": [[e, v] for e, v in entries.items()]},
          "\n".join(lines))
    return OK


def cmd_berry(args) -> int:
    s = _structure(args)
    report = berry(s, args.k, cap=args.cap)
    data = report.as_dict()
    text = "\n".join(f"{key}: {data[key]}" for key in
                     ("k", "A_k", "B_k", "defining_code", "contradiction", "membership_value",
                      "pool_size", "truncated"))
    _emit(args, data, text)
    return OK


def _read_tables(path: str) -> list[list[int]]:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [[int(ch) for ch in line.strip()] for line in text.splitlines() if line.strip()]
    if not isinstance(data, list) or not all(isinstance(t, list) for t in data):
        raise _UsageError("tables file must be a JSON list of digit lists or one digit string per line")
    return [[int(d) for d in t] for t in data]


def cmd_richard(args) -> int:
    report = richard(_read_tables(args.tables))
    data = report.as_dict()
    diag = "0." + "".join(map(str, data["diagonal"]))
    text = f"diagonal: {diag}\nmismatches: {data['mismatches']}\nself_membership: {data['self_membership']}"
    _emit(args, data, text)
    return OK


def cmd_rat(args) -> int:
    q = eval_rat_expr(args.expr)
    _emit(args, {"den": q.den, "flavor": str(q.flavor), "num": q.num, "value": str(q)}, str(q))
    return OK


def cmd_real(args) -> int:
    flavor = parse_flavor(args.flavor)
    x = read_digit_file(args.file1, parse_flavor(args.x_flavor or args.flavor))
    y = read_digit_file(args.file2, parse_flavor(args.y_flavor or args.flavor))
    v = real_compare(x, y, flavor, args.depth, args.relation)
    _emit(args, {"designated": is_designated(v), "relation": args.relation, "value": render(v)},
          render(v))
    return OK if is_designated(v) else FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="z2sharp", description="Paraconsistent second-order arithmetic workbench.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def model_opts(sp):
        sp.add_argument("--model", help="JSON structure file with bound, max_rank and optional subsets")
        sp.add_argument("--bound", type=int, default=4, help="carrier bound when no --model is given")
        sp.add_argument("--max-rank", type=int, default=1, help="maximum rank when no --model is given")

    def json_opt(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("parse", help="parse a formula and print its AST")
    sp.add_argument("formula")
    json_opt(sp)
    sp.set_defaults(run=cmd_parse)

    sp = sub.add_parser("godel", help="print the Gödel code of a formula")
    sp.add_argument("formula")
    json_opt(sp)
    sp.set_defaults(run=cmd_godel)

    sp = sub.add_parser("eval", help="evaluate a formula over a structure")
    sp.add_argument("formula")
    sp.add_argument("--let", action="append", metavar="x=3_w", help="bind a number variable")
    model_opts(sp)
    json_opt(sp)
    sp.set_defaults(run=cmd_eval)

    sp = sub.add_parser("axioms", help="axiom soundness checks")
    axsub = sp.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ck = axsub.add_parser("check", help="check an axiom group over a structure")
    ck.add_argument("--group", default="i", help="i, ii, iii, iv, v or a schema such as I7 or II3")
    ck.add_argument("--rank", type=int, help="restrict ranked flavors to this rank")
    ck.add_argument("--samples", type=int, default=20, help="formulas tried for iv and v")
    model_opts(ck)
    json_opt(ck)
    ck.set_defaults(run=cmd_axioms)

    sp = sub.add_parser("comprehend", help="solve a comprehension instance")
    sp.add_argument("formula")
    sp.add_argument("--scheme", required=True, help="iv, v.1, v.2 or v.3")
    sp.add_argument("--rank", type=int, help="rank for v.2 and v.3")
    sp.add_argument("--set-var", default="X")
    model_opts(sp)
    json_opt(sp)
    sp.set_defaults(run=cmd_comprehend)

    sp = sub.add_parser("berry", help="Berry construction")
    sp.add_argument("--k", type=int, required=True, help="code bound")
    sp.add_argument("--cap", type=int, default=10_000, help="enumeration cap")
    model_opts(sp)
    json_opt(sp)
    sp.set_defaults(run=cmd_berry)

    sp = sub.add_parser("richard", help="Richard diagonal")
    sp.add_argument("--tables", required=True, help="JSON list of digit lists, or one digit string per line")
    json_opt(sp)
    sp.set_defaults(run=cmd_richard)

    sp = sub.add_parser("rat", help="rational arithmetic")
    rsub = sp.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ev = rsub.add_parser("eval", help="evaluate an expression such as '1/2@s + 1/3@s'")
    ev.add_argument("expr")
    json_opt(ev)
    ev.set_defaults(run=cmd_rat)

    sp = sub.add_parser("real", help="real comparison")
    rsub = sp.add_subparsers(dest="action", required=True, parser_class=_Parser)
    cmp_ = rsub.add_parser("cmp", help="compare two digit files")
    cmp_.add_argument("file1")
    cmp_.add_argument("file2")
    cmp_.add_argument("--depth", type=int, required=True)
    cmp_.add_argument("--flavor", default="s", help="relation flavor: s, w, w(N) or w[N]")
    cmp_.add_argument("--x-flavor", help="flavor of the first real (default: --flavor)")
    cmp_.add_argument("--y-flavor", help="flavor of the second real (default: --flavor)")
    cmp_.add_argument("--relation", choices=("=", "<"), default="=")
    json_opt(cmp_)
    cmp_.set_defaults(run=cmd_real)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (NoFixpoint, AllDefined) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return FAILED
    except (Z2Error, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
