"""The axiom catalog: schema templates, instantiation, recognition of
instances, and soundness checks over finite structures.

Group i (basic arithmetic) and the order axioms of group iii exist once per
flavor. The induction axioms of group ii use the relativized quantifier
``forall n in_alpha Z. psi``, which is written out as the conjunction
``forall n. (n in_alpha Z & psi)``. Axioms that quantify over every rank
(ii.5, ii.6, ii.7) are truncated at a given maximum rank.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from .errors import RankError, SchemeError, SoundnessFailure, SortError
from .model.comprehension import solve_comprehension
from .model.definability import least_element
from .model.evaluate import _Evaluator
from .model.structure import Structure
from .syntax.ast import (
    Add, And, Const, Eq, ExistsNum, ExistsSet, ForallNum, ForallSet, Iff,
    Implies, Lt, Mem, Mul, Not, NumVar, Or, RankOp, flavors_of,
)
from .syntax.flavor import S, STRICT, W, WRANKED, Flavor, flavors_up_to, format_flavor, sr, wr
from .syntax.godel import enumerate_formulas
from .syntax.ops import alpha_equal, free_vars, universal_closure
from .syntax.printer import print_formula
from .truth import TruthValue, is_designated, render

I_GROUPS = tuple(f"I{k}" for k in range(1, 9))
II_GROUPS = tuple(f"II{k}" for k in range(1, 8))
III_GROUPS = ("III1", "III2", "III3")
V_GROUPS = ("V1", "V2", "V3")
ALL_GROUPS = I_GROUPS + II_GROUPS + III_GROUPS + ("IV1",) + V_GROUPS

# The flavor kind each fixed-flavor schema takes; I-groups take any flavor,
# II5/II6/II7 take none.
_FIXED_KIND = {
    "II1": "s", "II2": "w", "II3": WRANKED, "II4": STRICT,
    "III1": "w", "III2": WRANKED, "III3": STRICT,
    "IV1": "s", "V1": "w", "V2": WRANKED, "V3": STRICT,
}
_NO_FLAVOR = ("II5", "II6", "II7")


@dataclass(frozen=True, slots=True)
class SchemaId:
    group: str
    flavor: Flavor | None = None

    def __post_init__(self):
        if self.group not in ALL_GROUPS:
            raise ValueError(f"unknown schema {self.group!r}")
        if self.group in _NO_FLAVOR:
            if self.flavor is not None:
                raise RankError(f"{self.group} takes no flavor")
            return
        if self.flavor is None:
            raise RankError(f"{self.group} needs a flavor")
        kind = _FIXED_KIND.get(self.group)
        if kind is not None and self.flavor.kind != kind:
            raise RankError(f"{self.group} takes flavor kind {kind}, not {self.flavor}")

    @property
    def rank(self) -> int | None:
        return self.flavor.rank if self.flavor is not None and self.flavor.is_ranked else None

    def __str__(self) -> str:
        if self.flavor is None:
            return self.group
        return f"{self.group}[{format_flavor(self.flavor)}]"


def schema(group: str, flavor: Flavor | None = None, rank: int | None = None) -> SchemaId:
    """Convenience constructor: for fixed-kind schemas the rank alone is enough."""
    if flavor is None and group in _FIXED_KIND:
        kind = _FIXED_KIND[group]
        if kind == "s":
            flavor = S
        elif kind == "w":
            flavor = W
        elif rank is None:
            raise RankError(f"{group} needs a rank")
        else:
            flavor = wr(rank) if kind == WRANKED else sr(rank)
    return SchemaId(group, flavor)


@dataclass(frozen=True)
class SchemaInstance:
    id: SchemaId
    formula: object
    bindings: Mapping = field(default_factory=dict)

    def __str__(self) -> str:
        return f"{self.id}: {print_formula(self.formula)}"


# Template building blocks

_m, _n = NumVar("m"), NumVar("n")


def _zero(a):
    return Const(0, a)


def _one(a):
    return Const(1, a)


def _conj(parts):
    parts = list(parts)
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def _basic(group: str, a: Flavor):
    """The open body of basic axiom group ``group`` for flavor ``a``."""
    if group == "I1":
        return _conj([Not(Eq(Add(_n, _one(a)), _zero(a), S)),
                      Eq(_one(a), _one(a), S), Eq(_zero(a), _zero(a), S)])
    if group == "I2":
        return Implies(Eq(Add(_m, _one(a)), Add(_n, _one(a)), a), Eq(_m, _n, a))
    if group == "I3":
        return Eq(Add(_m, _zero(a)), _m, a)
    if group == "I4":
        return Eq(Add(_m, Add(_n, _one(a))), Add(Add(_m, _n), _one(a)), a)
    if group == "I5":
        return Eq(Mul(_m, _zero(a)), _zero(a), a)
    if group == "I6":
        return Eq(Mul(_m, Add(_n, _one(a))), Add(Mul(_m, _n), _m), a)
    if group == "I7":
        return Not(Lt(_m, _zero(a), a))
    if group == "I8":
        return Iff(Lt(_m, Add(_n, _one(a)), a), Or(Lt(_m, _n, a), Eq(_m, _n, a)))
    raise ValueError(group)


def _guarded_all(a: Flavor, guard: str, body):
    """``forall n. (n in_a guard & body)`` -- the relativized quantifier."""
    return ForallNum("n", And(Mem(_n, guard, a), body))


def _step(a: Flavor, succ: Flavor, mem: Flavor, x: str, y: str):
    """Closure of X under n -> n + 1_succ, relativized to Y."""
    return _guarded_all(mem, y, Implies(Mem(_n, x, mem), Mem(Add(_n, _one(succ)), x, mem)))


def _induction_body(group: str, a: Flavor | None, max_rank: int, x: str = "X", y: str = "Y"):
    if group in ("II1", "II2", "II3", "II4"):
        base = And(Mem(_zero(a), x, a), _step(a, a, a, x, y))
        return Implies(base, _guarded_all(a, y, Mem(_n, x, a)))
    if group in ("II5", "II6"):
        mk = wr if group == "II5" else sr
        ranks = range(max_rank + 1)
        premise = _conj(And(Mem(_zero(mk(i)), x, mk(i)), _step(mk(i), mk(i), mk(i), x, y)) for i in ranks)
        concl = _conj(_guarded_all(mk(j), y, Mem(_n, x, mk(j))) for j in ranks)
        return Implies(premise, concl)
    if group == "II7":
        ranks = range(max_rank + 1)
        zeros = [S, W] + [wr(i) for i in ranks] + [sr(i) for i in ranks]
        parts = [Mem(_zero(f), x, S) for f in zeros]
        parts += [_step(S, f, S, x, y) for f in zeros]
        return Implies(_conj(parts), _guarded_all(S, y, Mem(_n, x, S)))
    raise ValueError(group)


def _order(a: Flavor, x: str = "X"):
    nonempty = ExistsNum("n", Mem(_n, x, a))
    least = ExistsNum("n", And(Mem(_n, x, a),
                               ForallNum("m", Implies(Lt(_m, _n, a), Not(Mem(_m, x, a))))))
    return ForallSet(x, Implies(nonempty, least))


def _comprehension(sid: SchemaId, phi, var: str, x: str):
    nums, sets = free_vars(phi)
    if sid.group == "IV1" and x in sets:
        raise SchemeError(f"{x} may not occur free in an s-comprehension formula")
    a = sid.flavor
    rhs = RankOp(phi, a) if a.is_ranked else phi
    body = ExistsSet(x, ForallNum(var, Iff(Mem(NumVar(var), x, a), rhs)))
    return universal_closure(body)


def instantiate(sid: SchemaId | str, bindings: Mapping | None = None, **kw) -> SchemaInstance:
    """Instantiate a schema.

    Bindings: ``flavor`` (or build ``sid`` with ``schema``), ``max_rank`` for
    II5/II6/II7, ``phi`` and optionally ``var`` (default: the single free
    number variable of phi) and ``set_var`` (default "X") for IV1/V1/V2/V3.
    The result is the universal closure.
    """
    b = dict(bindings or {}, **kw)
    if isinstance(sid, str):
        sid = schema(sid, b.get("flavor"), b.get("rank"))
    g = sid.group
    if g in I_GROUPS:
        f = universal_closure(_basic(g, sid.flavor))
    elif g in II_GROUPS:
        max_rank = int(b.get("max_rank", 0))
        if max_rank < 0:
            raise RankError("max_rank must be a natural")
        body = _induction_body(g, sid.flavor, max_rank)
        f = ExistsSet("Y", ForallSet("X", body))
        if g in _NO_FLAVOR:
            b["max_rank"] = max_rank
    elif g in III_GROUPS:
        f = _order(sid.flavor)
    else:
        if "phi" not in b:
            raise SortError(f"{g} needs a formula binding 'phi'")
        phi = b["phi"]
        nums, _sets = free_vars(phi)
        var = b.get("var")
        if var is None:
            if len(nums) != 1:
                raise SortError("give 'var' when phi does not have exactly one free number variable")
            (var,) = nums
        if not var[:1].islower():
            raise SortError(f"{var!r} is not a number variable")
        set_var = b.get("set_var", "X")
        if not set_var[:1].isupper():
            raise SortError(f"{set_var!r} is not a set variable")
        f = _comprehension(sid, phi, var, set_var)
        b.update(var=var, set_var=set_var)
    return SchemaInstance(sid, f, b)


def _candidate_flavors(f) -> list[Flavor]:
    found = flavors_of(f) | {S, W}
    return sorted(found, key=lambda fl: (fl.kind, fl.rank or 0))


def _match_comprehension(f) -> SchemaId | None:
    nums, sets = free_vars(f)
    if nums or sets:
        return None
    core = f
    while isinstance(core, (ForallNum, ForallSet)):
        core = core.body
    if not (isinstance(core, ExistsSet) and isinstance(core.body, ForallNum)):
        return None
    x, var = core.var, core.body.var
    body = core.body.body
    if not (isinstance(body, Iff) and isinstance(body.left, Mem)
            and body.left.term == NumVar(var) and body.left.set_var == x):
        return None
    a, rhs = body.left.flavor, body.right
    if a == S:
        return SchemaId("IV1", S) if x not in free_vars(rhs)[1] else None
    if a == W:
        return SchemaId("V1", W)
    if isinstance(rhs, RankOp) and rhs.flavor == a:
        return SchemaId("V2" if a.kind == WRANKED else "V3", a)
    return None


def is_axiom_instance(f) -> SchemaId | None:
    """The schema ``f`` instantiates, up to renaming of bound variables."""
    if free_vars(f) != (frozenset(), frozenset()):
        return None
    flavors = _candidate_flavors(f)
    max_rank = max((fl.rank for fl in flavors if fl.is_ranked), default=0)
    for g in I_GROUPS:
        for a in flavors:
            if alpha_equal(f, instantiate(SchemaId(g, a)).formula):
                return SchemaId(g, a)
    for g in II_GROUPS + III_GROUPS:
        if g in _NO_FLAVOR:
            if alpha_equal(f, instantiate(SchemaId(g), max_rank=max_rank).formula):
                return SchemaId(g)
            continue
        for a in flavors:
            if a.kind != _FIXED_KIND[g]:
                continue
            if alpha_equal(f, instantiate(SchemaId(g, a)).formula):
                return SchemaId(g, a)
    return _match_comprehension(f)


# Soundness checks


@dataclass(frozen=True)
class Failure:
    schema: str
    formula: str
    assignment: str
    value: TruthValue

    def __str__(self) -> str:
        where = f" at {self.assignment}" if self.assignment else ""
        return f"{self.schema}: {self.formula}{where} -> {render(self.value)}"


@dataclass
class GroupReport:
    group: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"group {self.group}: {status} ({self.checked} checks, {len(self.failures)} failures)"]
        lines += [f"  note: {n}" for n in self.notes]
        lines += [f"  {f}" for f in self.failures]
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {"group": self.group, "passed": self.passed, "checked": self.checked,
                "failures": [str(f) for f in self.failures], "notes": list(self.notes)}


def _flavors(s: Structure, kind: str | None, rank: int | None) -> list[Flavor]:
    out = []
    for f in flavors_up_to(s.max_rank):
        if kind is not None and f.kind != kind:
            continue
        if rank is not None and f.is_ranked and f.rank != rank:
            continue
        out.append(f)
    return out


def _witness_slice(s: Structure, sid: SchemaId):
    g = sid.group
    if g in ("II1", "II2", "II3", "II4"):
        return s.classical_table(s.slice(sid.flavor))
    if g == "II5":
        return s.classical_table(s.ranked_union(WRANKED))
    if g == "II6":
        return s.classical_table(s.ranked_union(STRICT))
    return s.classical_table(s.carrier)


def _order_slice(s: Structure, sid: SchemaId):
    return s.slice(sid.flavor)


_GROUP_RE = re.compile(r"(?i)(i{1,3}|iv|v)(\d*)")


def _expand(group: str) -> tuple[str, list[str]]:
    """Normalize a family name ("i", "ii", ...) or schema name ("I3", "ii5")."""
    g = group.strip()
    m = _GROUP_RE.fullmatch(g)
    if not m:
        raise ValueError(f"unknown axiom group {group!r}")
    roman, num = m.group(1).upper(), m.group(2)
    members = [x for x in ALL_GROUPS if re.fullmatch(roman + r"\d+", x)]
    if num:
        name = roman + num
        if name not in ALL_GROUPS:
            raise ValueError(f"unknown axiom group {group!r}")
        return name, [name]
    return roman.lower(), members


def _sample_formulas(samples: int, allow_set: bool, pool: Iterable | None):
    source = pool if pool is not None else enumerate_formulas(5000)
    out = []
    for f in source:
        nums, sets = free_vars(f)
        if len(nums) == 1 and (not sets or (allow_set and sets == {"X"})):
            out.append(f)
        if len(out) >= samples:
            break
    return out


def check_group(s: Structure, group: str, samples: int = 20, rank: int | None = None,
                raise_on_failure: bool = True, pool: Iterable | None = None) -> GroupReport:
    """Soundness check of an axiom family ("i" .. "v") or single schema
    ("I7", "II3", ...) over ``s``.

    i: every instance for every flavor up to the structure's max rank,
    at every assignment of its free variables. ii: the existential closure
    over the subset range, and the body with Y bound to its intended slice
    at every X. iii: every table with a member in the flavor's slice has a
    least element there, and the order formula holds. iv/v: for ``samples``
    formulas phi from the pool, the comprehension table solved for phi
    witnesses the scheme. ``rank`` restricts ranked flavors to that rank.
    Raises SoundnessFailure unless ``raise_on_failure`` is False.
    """
    name, members = _expand(group)
    report = GroupReport(name)
    ev = _Evaluator(s)

    def fail(sid, formula, assignment, value):
        report.failures.append(Failure(str(sid), print_formula(formula), assignment, value))

    for g in members:
        if g in I_GROUPS:
            for a in _flavors(s, None, rank):
                sid = SchemaId(g, a)
                body = _basic(g, a)
                names = sorted(free_vars(body)[0])
                for values in product(s.carrier, repeat=len(names)):
                    env = dict(zip(names, values))
                    v = ev.run(body, env, {})
                    report.checked += 1
                    if not is_designated(v):
                        fail(sid, body, ", ".join(f"{k}={env[k]}" for k in names), v)
        elif g in II_GROUPS:
            if g in _NO_FLAVOR:
                if rank is not None and rank > s.max_rank:
                    continue
                sids = [SchemaId(g)]
            else:
                sids = [SchemaId(g, a) for a in _flavors(s, _FIXED_KIND[g], rank)]
            for sid in sids:
                inst = instantiate(sid, max_rank=s.max_rank)
                v = ev.run(inst.formula, {}, {})
                report.checked += 1
                if not is_designated(v):
                    fail(sid, inst.formula, "", v)
                body = _induction_body(g, sid.flavor, s.max_rank)
                y = _witness_slice(s, sid)
                for x in s.subsets:
                    v = ev.run(body, {}, {"X": x, "Y": y})
                    report.checked += 1
                    if not is_designated(v):
                        fail(sid, body, f"Y=slice, X={x.describe()}", v)
        elif g in III_GROUPS:
            for a in _flavors(s, _FIXED_KIND[g], rank):
                sid = SchemaId(g, a)
                dom = _order_slice(s, sid)
                for table in s.subsets:
                    if not any(is_designated(s.membership(e, table, a)) for e in dom):
                        continue
                    report.checked += 1
                    if least_element(s, table, a, dom) is None:
                        fail(sid, _order(a), f"X={table.describe()}", TruthValue("F"))
                inst = instantiate(sid)
                v = ev.run(inst.formula, {}, {})
                report.checked += 1
                if not is_designated(v):
                    fail(sid, inst.formula, "", v)
        else:
            if g == "IV1":
                sids = [SchemaId("IV1", S)]
            else:
                sids = [SchemaId(g, a) for a in _flavors(s, _FIXED_KIND[g], rank)]
            for sid in sids:
                phis = _sample_formulas(samples, g != "IV1", pool)
                for phi in phis:
                    (var,) = free_vars(phi)[0]
                    inst = instantiate(sid, phi=phi, var=var)
                    core = inst.formula
                    while not isinstance(core, ExistsSet):
                        core = core.body
                    report.checked += 1
                    scheme = {"IV1": "iv", "V1": "v.1"}.get(g) or (f"v.{g[1]}({sid.rank})")
                    try:
                        table = solve_comprehension(s, phi, scheme)
                    except Exception as exc:  # NoFixpoint or SchemeError
                        fail(sid, inst.formula, f"no witness: {exc}", TruthValue("F"))
                        continue
                    v = ev.run(core.body, {}, {core.var: table})
                    if not is_designated(v):
                        fail(sid, inst.formula, f"X={table.describe()}", v)
                report.notes.append(f"{sid}: witnessed by solved tables for {len(phis)} formulas")
    if report.failures and raise_on_failure:
        raise SoundnessFailure(report)
    return report
