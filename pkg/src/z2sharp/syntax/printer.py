"""Canonical concrete rendering of terms and formulas.

The output always reparses to the same AST: nested binary connectives and
quantified operands are parenthesized explicitly, so no precedence
knowledge is needed to read it back.
"""

from __future__ import annotations

from .ast import (
    Add, And, BINARIES, Const, Eq, ExistsNum, ExistsSet, ForallNum, ForallSet,
    Iff, Implies, Lt, Mem, Mul, Not, NumVar, Or, QUANTIFIERS, RankOp,
)
from .flavor import format_flavor

_CONNECTIVE = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
_QUANTIFIER = {ForallNum: "forall", ForallSet: "forall",
               ExistsNum: "exists", ExistsSet: "exists"}


def rank_suffix(flavor) -> str:
    """The ``^(n)`` / ``^[n]`` postfix for a rank operator flavor."""
    if flavor.is_strict:
        return f"^[{flavor.rank}]"
    return f"^({flavor.rank})"


def print_term(t) -> str:
    if isinstance(t, NumVar):
        return t.name
    if isinstance(t, Const):
        return f"{t.value}_{format_flavor(t.flavor)}"
    if isinstance(t, Add):
        left = print_term(t.left)
        right = print_term(t.right)
        if isinstance(t.right, Add):
            right = f"({right})"
        return f"{left} + {right}"
    if isinstance(t, Mul):
        left = print_term(t.left)
        right = print_term(t.right)
        if isinstance(t.left, Add):
            left = f"({left})"
        if isinstance(t.right, (Add, Mul)):
            right = f"({right})"
        return f"{left} * {right}"
    raise TypeError(f"not a term: {t!r}")


def _operand(f) -> str:
    text = print_formula(f)
    if isinstance(f, BINARIES) or isinstance(f, QUANTIFIERS):
        return f"({text})"
    return text


def print_formula(f) -> str:
    if isinstance(f, Eq):
        return f"{print_term(f.left)} ={format_flavor(f.flavor)} {print_term(f.right)}"
    if isinstance(f, Lt):
        return f"{print_term(f.left)} <{format_flavor(f.flavor)} {print_term(f.right)}"
    if isinstance(f, Mem):
        return f"{print_term(f.term)} in_{format_flavor(f.flavor)} {f.set_var}"
    if isinstance(f, Not):
        return f"!({print_formula(f.body)})"
    if isinstance(f, BINARIES):
        return f"{_operand(f.left)} {_CONNECTIVE[type(f)]} {_operand(f.right)}"
    if isinstance(f, QUANTIFIERS):
        return f"{_QUANTIFIER[type(f)]} {f.var}. {print_formula(f.body)}"
    if isinstance(f, RankOp):
        return f"({print_formula(f.body)}){rank_suffix(f.flavor)}"
    raise TypeError(f"not a formula: {f!r}")


def to_text(node) -> str:
    """Render either a term or a formula."""
    if isinstance(node, (NumVar, Const, Add, Mul)):
        return print_term(node)
    return print_formula(node)
