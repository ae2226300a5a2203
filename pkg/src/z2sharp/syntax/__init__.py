"""Syntax of the two-sorted language: AST, parser, printer, substitution,
Gödel numbering and enumeration."""

from .ast import (
    Add, And, Const, Eq, ExistsNum, ExistsSet, ForallNum, ForallSet, Iff,
    Implies, Lt, Mem, Mul, Not, NumVar, Or, RankOp, flavors_of, node_count,
)
from .flavor import (
    Flavor, S, W, enumeration_key, flavors_up_to, format_flavor, join,
    parse_flavor, sr, wr,
)
from .godel import (
    enumerate_formulas, formula_of_code, godel_number, pair, serialize, unpair,
)
from .ops import alpha_equal, free_vars, substitute, universal_closure
from .parser import parse, parse_term
from .printer import print_formula, print_term, to_text

enumerate = enumerate_formulas  # noqa: A001 - the public name of the operation

__all__ = [
    "Add", "And", "Const", "Eq", "ExistsNum", "ExistsSet", "ForallNum",
    "ForallSet", "Iff", "Implies", "Lt", "Mem", "Mul", "Not", "NumVar", "Or",
    "RankOp", "Flavor", "S", "W", "sr", "wr", "enumeration_key",
    "flavors_up_to", "format_flavor", "join", "parse_flavor", "flavors_of",
    "node_count", "enumerate_formulas", "formula_of_code", "godel_number",
    "pair", "unpair", "serialize", "alpha_equal", "free_vars", "substitute",
    "universal_closure", "parse", "parse_term", "print_formula", "print_term",
    "to_text",
]
