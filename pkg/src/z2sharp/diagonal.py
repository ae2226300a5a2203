"""Berry and Richard constructions at desk scale.

Berry: A_k is the set of W-flavored numbers defined by some formula of
code at most k, and B_k the least W-flavored number outside A_k. The
sentence defining B_k has a code g* of its own; once k >= g*, B_k is
defined within budget, so B_k both belongs and does not belong to A_k.
The report records that contradiction as a Both value instead of letting it
trivialize anything.

Richard: the p-th digit of the diagonal real differs from the p-th digit
of the p-th listed real, so the diagonal differs from every listed real.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AllDefined, ShortTable
from .model.definability import definable_elements, least_element
from .model.evaluate import Assignment, Entailment, entails
from .model.structure import Element, Structure
from .numbers.reals import ParaReal
from .syntax.ast import Eq, Const
from .syntax.flavor import S, W, wr
from .syntax.godel import DEFAULT_CAP, enumerate_formulas, godel_number
from .syntax.parser import parse
from .truth import FALSE, TruthValue, both, render

# "x is not in X, and every y below x is": with X read as the definable
# numbers this says that x is the least number not defined in budget.
META_FORMULA_TEXT = "!(x in_w X) & (forall y. y <w x -> y in_w X)"
META_FORMULA = parse(META_FORMULA_TEXT)
ENUMERATION_CAP = 10_000
CONTRADICTION = both(wr(0))


def meta_code() -> int:
    """g*: the code of the formula that defines B_k."""
    return godel_number(META_FORMULA)


@dataclass(frozen=True)
class BerryReport:
    k: int
    A_k: frozenset
    B_k: Element
    defining_code: int
    contradiction: bool
    membership_value: TruthValue
    pool_size: int
    truncated: bool

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "A_k": [str(e) for e in sorted(self.A_k, key=lambda e: e.sort_key())],
            "B_k": str(self.B_k),
            "defining_code": self.defining_code,
            "contradiction": self.contradiction,
            "membership_value": render(self.membership_value),
            "pool_size": self.pool_size,
            "truncated": self.truncated,
        }


def berry(s: Structure, k: int, pool: Iterable | None = None, cap: int = ENUMERATION_CAP) -> BerryReport:
    """The Berry construction over the W-flavored slice of ``s``.

    The definability pool is every enumerated formula of code at most
    min(k, cap); when k exceeds the cap the report is marked truncated.
    An explicit ``pool`` replaces the enumeration.
    """
    domain = s.slice(W)
    truncated = False
    if pool is None:
        limit = min(k, cap)
        truncated = k > cap
        formulas = enumerate_formulas(limit, max(cap, DEFAULT_CAP))
    else:
        formulas = list(pool)
    defined = definable_elements(s, k, domain=domain, pool=formulas)
    rest = [e for e in domain if e not in defined]
    if not rest:
        raise AllDefined(f"every element of the W slice is defined at k = {k}")
    complement = s.classical_table(rest)
    b = least_element(s, complement, W, domain)
    g_star = meta_code()
    contradiction = g_star <= k
    return BerryReport(
        k=k,
        A_k=defined,
        B_k=b,
        defining_code=g_star,
        contradiction=contradiction,
        membership_value=CONTRADICTION if contradiction else FALSE,
        pool_size=len(formulas),
        truncated=truncated,
    )


def berry_contradiction(s: Structure, report: BerryReport):
    """The registered pair ``B in_w A`` and ``!(B in_w A)`` with the
    assignment that realizes it: A is the definable set with B's entry set
    to the report's membership value."""
    table = s.classical_table(report.A_k).with_value(report.B_k, report.membership_value)
    premises = [parse("b in_w A"), parse("!(b in_w A)")]
    return premises, Assignment({"b": report.B_k}, {"A": table})


def berry_explodes(s: Structure, report: BerryReport, conclusion=None) -> Entailment:
    """Whether the registered contradiction entails ``conclusion``
    (default ``0_s =s 1_s``). Paraconsistency predicts it does not."""
    if conclusion is None:
        conclusion = Eq(Const(0, S), Const(1, S), S)
    premises, assignment = berry_contradiction(s, report)
    return entails(s, premises, conclusion, assignment)


@dataclass(frozen=True)
class RichardReport:
    tables: tuple
    diagonal: ParaReal | None
    mismatches: tuple
    self_membership: TruthValue

    def as_dict(self) -> dict:
        return {
            "tables": [list(t) for t in self.tables],
            "diagonal": list(self.diagonal.digits) if self.diagonal else [],
            "mismatches": list(self.mismatches),
            "self_membership": render(self.self_membership),
        }


def richard_diagonal(tables: Sequence[Sequence[int]]) -> ParaReal | None:
    """Digit p (1-based) is 1 when digit p of table p is not 1, else 0.

    Returns None for an empty list, which has no diagonal digits.
    """
    digits = []
    for p, table in enumerate(tables, start=1):
        if len(table) < p:
            raise ShortTable(p)
        digits.append(0 if table[p - 1] == 1 else 1)
    if not digits:
        return None
    return ParaReal.from_digits(digits, W)


def richard_verify(tables: Sequence[Sequence[int]], diagonal: ParaReal | None = None) -> RichardReport:
    """Positions p at which table p and the diagonal disagree at digit p.

    For a diagonal built by ``richard_diagonal`` this is every position.
    """
    if diagonal is None:
        diagonal = richard_diagonal(tables)
    digits = diagonal.digits if diagonal is not None else ()
    mismatches = tuple(p for p, table in enumerate(tables, start=1)
                       if p <= len(digits) and len(table) >= p and table[p - 1] != digits[p - 1])
    return RichardReport(tuple(tuple(t) for t in tables), diagonal, mismatches, CONTRADICTION)


def richard(tables: Sequence[Sequence[int]]) -> RichardReport:
    return richard_verify(tables, richard_diagonal(tables))
