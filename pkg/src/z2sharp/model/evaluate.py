"""Evaluation of terms and formulas over a finite structure, and semantic
entailment."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from ..errors import ResourceError, UnboundVariable
from ..numbers.naturals import ParaNat
from ..syntax.ast import (
    Add, And, Const, Eq, ExistsNum, ExistsSet, ForallNum, ForallSet, Iff,
    Implies, Lt, Mem, Mul, Not, NumVar, Or, RankOp,
)
from ..syntax.ops import free_vars
from ..truth import FALSE, TRUE, TruthValue, apply_rank, conjoin, disjoin, iff, implies, is_designated, negate
from .structure import Element, MembershipTable, Structure

ENTAILMENT_CAP = 1_000_000


@dataclass(frozen=True)
class Assignment:
    num: Mapping[str, Element] = field(default_factory=dict)
    set: Mapping[str, MembershipTable] = field(default_factory=dict)

    def bind(self, **values) -> "Assignment":
        """Return a copy with extra bindings; the sort follows the name's case."""
        num, sets = dict(self.num), dict(self.set)
        for name, value in values.items():
            (num if name[0].islower() else sets)[name] = value
        return Assignment(num, sets)


EMPTY = Assignment()


def eval_term(s: Structure, a: Assignment | None, t) -> Element:
    nums = dict(a.num) if a else {}
    return _term(s, t, nums)


def _term(s: Structure, t, nums) -> Element:
    if isinstance(t, NumVar):
        try:
            return nums[t.name]
        except KeyError:
            raise UnboundVariable(f"number variable {t.name!r} is unbound") from None
    if isinstance(t, Const):
        return s.zero(t.flavor) if t.value == 0 else s.one(t.flavor)
    if isinstance(t, Add):
        return s.add(_term(s, t.left, nums), _term(s, t.right, nums))
    if isinstance(t, Mul):
        return s.mul(_term(s, t.left, nums), _term(s, t.right, nums))
    raise TypeError(f"not a term: {t!r}")


def evaluate(s: Structure, a: Assignment | Mapping | None, f) -> TruthValue:
    """Truth value of ``f`` in ``s`` under ``a``.

    Number quantifiers range over the carrier and set quantifiers over the
    structure's subset range; the universal is the conjunction (minimum) of
    the instances and the existential their disjunction (maximum).
    """
    if a is None:
        a = EMPTY
    elif not isinstance(a, Assignment):
        a = EMPTY.bind(**a)
    return _Evaluator(s).run(f, dict(a.num), dict(a.set))


class _Evaluator:
    def __init__(self, s: Structure):
        self.s = s

    def run(self, f, nums, sets) -> TruthValue:
        s = self.s
        if isinstance(f, Eq):
            return s.relation("=", f.flavor, _term(s, f.left, nums), _term(s, f.right, nums))
        if isinstance(f, Lt):
            return s.relation("<", f.flavor, _term(s, f.left, nums), _term(s, f.right, nums))
        if isinstance(f, Mem):
            try:
                table = sets[f.set_var]
            except KeyError:
                raise UnboundVariable(f"set variable {f.set_var!r} is unbound") from None
            return s.membership(_term(s, f.term, nums), table, f.flavor)
        if isinstance(f, Not):
            return negate(self.run(f.body, nums, sets))
        if isinstance(f, And):
            left = self.run(f.left, nums, sets)
            if left.tag == "F":
                return FALSE
            return conjoin(left, self.run(f.right, nums, sets))
        if isinstance(f, Or):
            left = self.run(f.left, nums, sets)
            if left.tag == "T":
                return TRUE
            return disjoin(left, self.run(f.right, nums, sets))
        if isinstance(f, Implies):
            left = self.run(f.left, nums, sets)
            if left.tag == "F":
                return TRUE
            return implies(left, self.run(f.right, nums, sets))
        if isinstance(f, Iff):
            return iff(self.run(f.left, nums, sets), self.run(f.right, nums, sets))
        if isinstance(f, (ForallNum, ExistsNum)):
            return self._quantify(f, nums, sets, nums, s.carrier)
        if isinstance(f, (ForallSet, ExistsSet)):
            return self._quantify(f, nums, sets, sets, s.subsets)
        if isinstance(f, RankOp):
            return apply_rank(self.run(f.body, nums, sets), f.flavor)
        raise TypeError(f"not a formula: {f!r}")

    def _quantify(self, f, nums, sets, env, domain) -> TruthValue:
        universal = isinstance(f, (ForallNum, ForallSet))
        stop = "F" if universal else "T"
        combine = conjoin if universal else disjoin
        acc = TRUE if universal else FALSE
        missing = object()
        saved = env.get(f.var, missing)
        try:
            for value in domain:
                env[f.var] = value
                acc = combine(acc, self.run(f.body, nums, sets))
                if acc.tag == stop:
                    break
        finally:
            if saved is missing:
                del env[f.var]
            else:
                env[f.var] = saved
        return acc


@dataclass(frozen=True)
class Entailment:
    holds: bool
    countermodel: Assignment | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.holds


def assignment_space(s: Structure, formulas: Iterable, fixed: Assignment | None = None):
    """Names to range over (those free and not fixed) and the space size."""
    fixed = fixed or EMPTY
    nums: set[str] = set()
    sets: set[str] = set()
    for f in formulas:
        n, st = free_vars(f)
        nums |= n
        sets |= st
    nums = sorted(nums - set(fixed.num))
    sets = sorted(sets - set(fixed.set))
    size = len(s.carrier) ** len(nums) * len(s.subsets) ** len(sets)
    return nums, sets, size


def entails(s: Structure, premises: list, conclusion, assignment: Assignment | None = None,
            cap: int = ENTAILMENT_CAP) -> Entailment:
    """Semantic consequence over one structure: every assignment that makes
    all premises designated makes the conclusion designated.

    Free variables not fixed by ``assignment`` range over the carrier or the
    subset range. Returns the first counter-assignment when it fails.
    """
    fixed = assignment or EMPTY
    nums, sets, size = assignment_space(s, [*premises, conclusion], fixed)
    if size > cap:
        raise ResourceError(f"{size} assignments exceed the entailment cap {cap}")
    ev = _Evaluator(s)
    checked = 0
    for num_vals in product(s.carrier, repeat=len(nums)):
        for set_vals in product(s.subsets, repeat=len(sets)):
            n_env = {**fixed.num, **dict(zip(nums, num_vals))}
            s_env = {**fixed.set, **dict(zip(sets, set_vals))}
            checked += 1
            if all(is_designated(ev.run(p, n_env, s_env)) for p in premises):
                if not is_designated(ev.run(conclusion, n_env, s_env)):
                    return Entailment(False, Assignment(n_env, s_env), checked)
    return Entailment(True, None, checked)


__all__ = [
    "Assignment", "Entailment", "ParaNat", "assignment_space", "entails",
    "eval_term", "evaluate",
]
