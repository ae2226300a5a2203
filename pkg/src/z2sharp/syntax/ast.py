"""Abstract syntax of the two-sorted paraconsistent language.

Number variables are lowercase identifiers, set variables uppercase. Every
atomic formula and every numeral constant carries exactly one Flavor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import RankError, SortError
from .flavor import Flavor


def is_number_name(name: str) -> bool:
    return bool(name) and name[0].islower()


def is_set_name(name: str) -> bool:
    return bool(name) and name[0].isupper()


# Terms


@dataclass(frozen=True, slots=True)
class NumVar:
    name: str

    def __post_init__(self):
        if not is_number_name(self.name):
            raise SortError(f"{self.name!r} is not a number variable name")


@dataclass(frozen=True, slots=True)
class Const:
    value: int  # 0 or 1
    flavor: Flavor

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError("numeral constants are 0 and 1 only")


@dataclass(frozen=True, slots=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, slots=True)
class Mul:
    left: "Term"
    right: "Term"


Term = Union[NumVar, Const, Add, Mul]


# Formulas


@dataclass(frozen=True, slots=True)
class Eq:
    left: Term
    right: Term
    flavor: Flavor


@dataclass(frozen=True, slots=True)
class Lt:
    left: Term
    right: Term
    flavor: Flavor


@dataclass(frozen=True, slots=True)
class Mem:
    term: Term
    set_var: str
    flavor: Flavor

    def __post_init__(self):
        if not is_set_name(self.set_var):
            raise SortError(f"{self.set_var!r} is not a set variable name")


@dataclass(frozen=True, slots=True)
class Not:
    body: "Formula"


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class ForallNum:
    var: str
    body: "Formula"

    def __post_init__(self):
        if not is_number_name(self.var):
            raise SortError(f"number quantifier over {self.var!r}")


@dataclass(frozen=True, slots=True)
class ExistsNum:
    var: str
    body: "Formula"

    def __post_init__(self):
        if not is_number_name(self.var):
            raise SortError(f"number quantifier over {self.var!r}")


@dataclass(frozen=True, slots=True)
class ForallSet:
    var: str
    body: "Formula"

    def __post_init__(self):
        if not is_set_name(self.var):
            raise SortError(f"set quantifier over {self.var!r}")


@dataclass(frozen=True, slots=True)
class ExistsSet:
    var: str
    body: "Formula"

    def __post_init__(self):
        if not is_set_name(self.var):
            raise SortError(f"set quantifier over {self.var!r}")


@dataclass(frozen=True, slots=True)
class RankOp:
    body: "Formula"
    flavor: Flavor

    def __post_init__(self):
        if not self.flavor.is_ranked:
            raise RankError("rank operators take w(n) or w[n] only")


Atom = Union[Eq, Lt, Mem]
Binary = Union[And, Or, Implies, Iff]
Quantifier = Union[ForallNum, ExistsNum, ForallSet, ExistsSet]
Formula = Union[Eq, Lt, Mem, Not, And, Or, Implies, Iff,
                ForallNum, ExistsNum, ForallSet, ExistsSet, RankOp]

ATOMS = (Eq, Lt, Mem)
BINARIES = (And, Or, Implies, Iff)
QUANTIFIERS = (ForallNum, ExistsNum, ForallSet, ExistsSet)
NUM_QUANTIFIERS = (ForallNum, ExistsNum)
SET_QUANTIFIERS = (ForallSet, ExistsSet)
TERMS = (NumVar, Const, Add, Mul)


def node_count(node) -> int:
    """Number of AST nodes, term nodes included."""
    if isinstance(node, (NumVar, Const)):
        return 1
    if isinstance(node, (Add, Mul, Eq, Lt, And, Or, Implies, Iff)):
        return 1 + node_count(node.left) + node_count(node.right)
    if isinstance(node, Mem):
        return 1 + node_count(node.term)
    return 1 + node_count(node.body)


def flavors_of(node) -> set[Flavor]:
    """Every flavor mentioned anywhere in ``node``."""
    out: set[Flavor] = set()
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, NumVar):
            continue
        if isinstance(n, Const):
            out.add(n.flavor)
        elif isinstance(n, (Eq, Lt)):
            out.add(n.flavor)
            stack += [n.left, n.right]
        elif isinstance(n, Mem):
            out.add(n.flavor)
            stack.append(n.term)
        elif isinstance(n, RankOp):
            out.add(n.flavor)
            stack.append(n.body)
        elif isinstance(n, (Add, Mul, And, Or, Implies, Iff)):
            stack += [n.left, n.right]
        else:
            stack.append(n.body)
    return out
