"""Definable elements and least elements."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..syntax.flavor import Flavor
from ..syntax.godel import DEFAULT_CAP, enumerate_formulas
from ..syntax.ops import free_vars
from ..truth import is_designated
from .evaluate import _Evaluator
from .structure import Element, MembershipTable, Structure


def defining_formulas(pool: Iterable) -> list:
    """The formulas of ``pool`` with exactly one free number variable and no
    free set variable: the candidates for defining a single number."""
    out = []
    for f in pool:
        nums, sets = free_vars(f)
        if len(nums) == 1 and not sets:
            out.append(f)
    return out


def defined_element(s: Structure, f, domain: Sequence[Element]) -> Element | None:
    """The unique element of ``domain`` at which ``f`` is True, if any.

    Only classical truth counts: a Both verdict holds together with its
    negation and so does not single an element out.
    """
    (var,) = free_vars(f)[0]
    ev = _Evaluator(s)
    found = None
    nums: dict = {}
    for e in domain:
        nums[var] = e
        if ev.run(f, nums, {}).tag == "T":
            if found is not None:
                return None
            found = e
    return found


def definable_elements(s: Structure, limit: int, domain: Sequence[Element] | None = None,
                       pool: Iterable | None = None, cap: int = DEFAULT_CAP) -> frozenset:
    """Elements of ``domain`` (default: the carrier) defined by some formula
    of code at most ``limit``.

    ``pool`` overrides the enumerated formulas. Raises ResourceError when
    ``limit`` exceeds the enumeration cap.
    """
    domain = list(s.carrier if domain is None else domain)
    formulas = enumerate_formulas(limit, cap) if pool is None else list(pool)
    found = set()
    for f in defining_formulas(formulas):
        e = defined_element(s, f, domain)
        if e is not None:
            found.add(e)
    return frozenset(found)


def least_element(s: Structure, table: MembershipTable, alpha: Flavor,
                  domain: Sequence[Element] | None = None) -> Element | None:
    """A least member of ``table`` under ``<alpha`` within ``domain``.

    Members are the domain elements whose ``in_alpha`` membership is
    designated. A member e is least when no other member x has ``x <alpha e``
    True and ``e <alpha x or e =alpha x`` is designated for every member x.
    Returns None for an empty table.
    """
    domain = list(s.carrier if domain is None else domain)
    members = [e for e in domain if is_designated(s.membership(e, table, alpha))]
    for e in sorted(members, key=lambda x: x.sort_key()):
        ok = True
        for x in members:
            if x == e:
                continue
            if s.relation("<", alpha, x, e).tag == "T":
                ok = False
                break
            if not (is_designated(s.relation("<", alpha, e, x)) or is_designated(s.relation("=", alpha, e, x))):
                ok = False
                break
        if ok:
            return e
    return None
