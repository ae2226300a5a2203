"""Comprehension: the set of all n satisfying a formula, built as a
membership table."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import NoFixpoint, SchemeError
from ..syntax.flavor import S, W, Flavor, sr, wr
from ..syntax.ops import free_vars
from ..truth import FALSE, TRUE, apply_rank, both, iff, is_designated
from .evaluate import _Evaluator
from .structure import MembershipTable, Structure


@dataclass(frozen=True, slots=True)
class Scheme:
    """``iv`` (strict comprehension), ``v.1`` (w-comprehension), ``v.2`` with
    rank i (w(i)-comprehension) or ``v.3`` with rank i (w[i]-comprehension)."""

    name: str
    rank: int | None = None

    def __post_init__(self):
        if self.name not in ("iv", "v.1", "v.2", "v.3"):
            raise SchemeError(f"unknown comprehension scheme {self.name!r}")
        if (self.name in ("v.2", "v.3")) != (self.rank is not None):
            raise SchemeError(f"scheme {self.name} rank mismatch")

    @property
    def flavor(self) -> Flavor:
        if self.name == "iv":
            return S
        if self.name == "v.1":
            return W
        return wr(self.rank) if self.name == "v.2" else sr(self.rank)

    def __str__(self) -> str:
        return self.name if self.rank is None else f"{self.name}({self.rank})"


_SCHEME_RE = re.compile(r"(iv|v\.1|v\.2|v\.3)(?:\((\d+)\))?")


def parse_scheme(text: str | Scheme, rank: int | None = None) -> Scheme:
    if isinstance(text, Scheme):
        return text
    m = _SCHEME_RE.fullmatch(text.strip())
    if not m:
        raise SchemeError(f"malformed scheme {text!r}")
    name, r = m.groups()
    if r is not None:
        rank = int(r)
    return Scheme(name, rank if name in ("v.2", "v.3") else None)


def solve_comprehension(s: Structure, phi, scheme: str | Scheme, set_var: str = "X",
                        rank: int | None = None) -> MembershipTable:
    """A table X with ``n in_alpha X <-> phi(n, X)`` designated at every
    carrier element, alpha being the scheme's flavor.

    Scheme iv (X may not occur free in phi): X is the classical table of
    the elements where phi is designated.

    Schemes v.*: start with every entry contradictory in the scheme flavor
    and iterate entry(n) <- phi(n, X) synchronously (re-tagged by the rank
    operator for v.2 and v.3). A contradictory entry may settle to a
    classical value. A classical entry asked to flip to the opposite
    classical value oscillates, so it returns to the contradiction and stays
    there. Entries still contradictory at the fixed point record genuine
    inconsistency. NoFixpoint is raised if the biconditional is still not
    designated somewhere after the iteration.
    """
    sch = parse_scheme(scheme, rank)
    nums, sets = free_vars(phi)
    if len(nums) != 1:
        raise SchemeError(f"comprehension needs exactly one free number variable, found {sorted(nums)}")
    (var,) = nums
    if sch.name == "iv" and sets:
        raise SchemeError("scheme iv forbids free set variables in the formula")
    if sets - {set_var}:
        raise SchemeError(f"unexpected free set variables {sorted(sets - {set_var})}")
    ev = _Evaluator(s)
    alpha = sch.flavor

    def target(e, table):
        v = ev.run(phi, {var: e}, {set_var: table})
        return apply_rank(v, alpha) if alpha.is_ranked else v

    if sch.name == "iv":
        table = s.table(lambda e: TRUE if is_designated(target(e, None)) else FALSE)
    else:
        table = s.table(lambda e: both(alpha))
        frozen: set = set()
        for _ in range(2 * len(s.carrier) + 2):
            changed = False
            entries = []
            for e, cur in table.entries:
                new = cur if e in frozen else target(e, table)
                if cur.is_both and new.is_classical and e not in frozen:
                    entries.append((e, new))
                    changed = True
                elif cur.is_classical and new.is_classical and new != cur:
                    # The entry oscillates; only a contradiction is stable.
                    entries.append((e, both(alpha)))
                    frozen.add(e)
                    changed = True
                else:
                    entries.append((e, cur))
            table = MembershipTable(tuple(entries))
            if not changed:
                break
    for e in s.carrier:
        if not is_designated(iff(s.membership(e, table, alpha), target(e, table))):
            raise NoFixpoint(f"scheme {sch} fails at {e}")
    return table
