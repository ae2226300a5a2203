"""Finite paraconsistent structures, membership tables and their
classification."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Mapping

from ..numbers.naturals import ParaNat, nat_add, nat_compare, nat_mul
from ..syntax.flavor import S, STRICT, W, WRANKED, Flavor, flavors_up_to, parse_flavor
from ..truth import (
    BOTH_W, FALSE, TRUE, TruthValue, apply_rank, is_designated, parse_truth, render,
)

Element = ParaNat

POWERSET_LIMIT = 16


@dataclass(frozen=True)
class MembershipTable:
    """A possibly contradictory set: a truth value for every carrier element.

    Elements outside the table read as False.
    """

    entries: tuple[tuple[Element, TruthValue], ...]
    _lookup: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", dict(self.entries))

    @classmethod
    def build(cls, carrier: Iterable[Element], value: Callable[[Element], TruthValue]) -> "MembershipTable":
        return cls(tuple((e, value(e)) for e in carrier))

    @classmethod
    def classical(cls, carrier: Iterable[Element], members: Iterable[Element]) -> "MembershipTable":
        inside = set(members)
        return cls.build(carrier, lambda e: TRUE if e in inside else FALSE)

    def value(self, e: Element) -> TruthValue:
        return self._lookup.get(e, FALSE)

    def __getitem__(self, e: Element) -> TruthValue:
        return self.value(e)

    def elements(self) -> list[Element]:
        return [e for e, _ in self.entries]

    def designated(self) -> list[Element]:
        return [e for e, v in self.entries if is_designated(v)]

    def with_value(self, e: Element, v: TruthValue) -> "MembershipTable":
        return MembershipTable(tuple((x, v if x == e else w) for x, w in self.entries))

    def describe(self) -> str:
        return "{" + ", ".join(f"{e}: {render(v)}" for e, v in self.entries if v != FALSE) + "}"


def canonical_relation(symbol: str, alpha: Flavor, x: Element, y: Element) -> TruthValue:
    """``=`` and ``<`` compare magnitudes; flavors decide the failing case."""
    return nat_compare(x, y, alpha, symbol)


def canonical_membership(e: Element, table: MembershipTable, alpha: Flavor) -> TruthValue:
    """Read an entry through a flavored membership relation.

    ``in_s`` is classical: True exactly when the entry is designated.
    ``in_w`` reads the entry as stored. A ranked ``in`` re-tags a
    contradictory entry to its own rank and passes classical entries through.
    """
    v = table.value(e)
    if alpha == S:
        return TRUE if is_designated(v) else FALSE
    if v.is_classical or alpha == W:
        return v
    return apply_rank(v, alpha)


@dataclass(frozen=True)
class Structure:
    """A finite structure: number carrier, range of the set variables, the
    arithmetic, and the flavored relations.

    ``relation(symbol, alpha, x, y)`` interprets ``=alpha`` (symbol "=") and
    ``<alpha`` (symbol "<"); ``membership(e, X, alpha)`` interprets
    ``in_alpha``. Constants ``0_alpha`` and ``1_alpha`` denote the elements of
    magnitude 0 and 1 with flavor alpha.
    """

    carrier: tuple[Element, ...]
    subsets: tuple[MembershipTable, ...]
    bound: int
    max_rank: int
    relation: Callable[[str, Flavor, Element, Element], TruthValue] = canonical_relation
    membership: Callable[[Element, MembershipTable, Flavor], TruthValue] = canonical_membership
    add: Callable[[Element, Element], Element] = nat_add
    mul: Callable[[Element, Element], Element] = nat_mul

    def __post_init__(self):
        if not self.carrier:
            raise ValueError("the number carrier must be nonempty")
        if not self.subsets:
            raise ValueError("the range of set variables must be nonempty")

    def zero(self, flavor: Flavor) -> Element:
        return ParaNat(0, flavor)

    def one(self, flavor: Flavor) -> Element:
        return ParaNat(1, flavor)

    def rel(self, symbol: str, alpha: Flavor) -> Callable[[Element, Element], TruthValue]:
        return lambda x, y: self.relation(symbol, alpha, x, y)

    def mem(self, e: Element, table: MembershipTable, alpha: Flavor) -> TruthValue:
        return self.membership(e, table, alpha)

    def slice(self, flavor: Flavor) -> list[Element]:
        """The elements carrying ``flavor``, in ascending magnitude."""
        return [e for e in self.carrier if e.flavor == flavor]

    def ranked_union(self, kind: str) -> list[Element]:
        """All W(n) elements (kind "w()") or all W[n] elements (kind "w[]")."""
        return [e for e in self.carrier if e.flavor.kind == kind]

    def table(self, value: Callable[[Element], TruthValue]) -> MembershipTable:
        return MembershipTable.build(self.carrier, value)

    def classical_table(self, members: Iterable[Element]) -> MembershipTable:
        return MembershipTable.classical(self.carrier, members)

    def with_subsets(self, subsets: Iterable[MembershipTable]) -> "Structure":
        return replace(self, subsets=tuple(subsets))


def canonical_carrier(bound: int, max_rank: int) -> tuple[Element, ...]:
    flavors = flavors_up_to(max_rank)
    return tuple(ParaNat(m, f) for m in range(bound + 1) for f in flavors)


def subset_family(carrier: tuple[Element, ...], max_rank: int, powerset: bool = False) -> tuple[MembershipTable, ...]:
    """The default range of the set variables.

    Always: the empty set, the full carrier and the all-Both(W) table; every
    flavor slice and the unions of all W(n) and of all W[n] slices; the
    down-sets and up-sets by magnitude inside each of these domains; every
    singleton. With ``powerset`` (carriers of at most 16 elements) every
    classical subset is included instead of the structured ones.
    """
    tables: list[MembershipTable] = []
    seen: set = set()

    def add(members: Iterable[Element]):
        t = MembershipTable.classical(carrier, members)
        if t.entries not in seen:
            seen.add(t.entries)
            tables.append(t)

    add(())
    if powerset:
        if len(carrier) > POWERSET_LIMIT:
            raise ValueError(f"powerset range needs a carrier of at most {POWERSET_LIMIT} elements")
        for k in range(1, len(carrier) + 1):
            for combo in combinations(carrier, k):
                add(combo)
    else:
        domains = [list(carrier)]
        domains += [[e for e in carrier if e.flavor == f] for f in flavors_up_to(max_rank)]
        domains += [[e for e in carrier if e.flavor.kind == WRANKED],
                    [e for e in carrier if e.flavor.kind == STRICT]]
        for dom in domains:
            if not dom:
                continue
            add(dom)
            mags = sorted({e.magnitude for e in dom})
            for k in mags:
                add(e for e in dom if e.magnitude <= k)
                add(e for e in dom if e.magnitude >= k)
        for e in carrier:
            add((e,))
    both_table = MembershipTable.build(carrier, lambda e: BOTH_W)
    tables.append(both_table)
    return tuple(tables)


def canonical_structure(bound: int, max_rank: int, powerset: bool = False) -> Structure:
    """The finite truncation of the intended model: every flavored natural
    of magnitude at most ``bound`` and rank at most ``max_rank``.

    Arithmetic is exact on magnitudes (results may leave the carrier, where
    every set reads False) and takes the more inconsistent operand flavor.
    """
    if bound < 0 or max_rank < 0:
        raise ValueError("bound and max_rank are naturals")
    carrier = canonical_carrier(bound, max_rank)
    return Structure(carrier, subset_family(carrier, max_rank, powerset), bound, max_rank)


# Classification


@dataclass(frozen=True, slots=True)
class Classification:
    kind: str  # SConsistent | WInconsistent | WRankedInconsistent | StrictRankedInconsistent | Mixed
    rank: int | None = None

    def __str__(self) -> str:
        return self.kind if self.rank is None else f"{self.kind}({self.rank})"


S_CONSISTENT = Classification("SConsistent")
W_INCONSISTENT = Classification("WInconsistent")
MIXED = Classification("Mixed")


def classify(s: Structure, table: MembershipTable) -> Classification:
    """SConsistent when every entry is classical; W-, W(n)- or W[n]-
    inconsistent when every entry is the contradiction of that one flavor;
    Mixed otherwise."""
    values = [table.value(e) for e in s.carrier]
    if all(v.is_classical for v in values):
        return S_CONSISTENT
    flavors = {v.flavor for v in values if v.is_both}
    if len(flavors) == 1 and all(v.is_both for v in values):
        (f,) = flavors
        if f == W:
            return W_INCONSISTENT
        if f.kind == WRANKED:
            return Classification("WRankedInconsistent", f.rank)
        return Classification("StrictRankedInconsistent", f.rank)
    return MIXED


# Model files


def structure_from_dict(doc: Mapping) -> Structure:
    """Build a structure from ``{"bound", "max_rank", "subsets"?}``.

    Each explicit subset is an array of ``{"magnitude", "flavor", "value"}``
    entries (value ``T``, ``F``, ``B_w``, ``B_w(n)`` or ``B_w[n]``; missing
    elements read False). Explicit subsets replace the default range.
    """
    bound = int(doc["bound"])
    max_rank = int(doc.get("max_rank", 0))
    s = canonical_structure(bound, max_rank, bool(doc.get("powerset", False)))
    if "subsets" in doc:
        carrier = set(s.carrier)
        tables = []
        for listed in doc["subsets"]:
            given = {}
            for item in listed:
                e = ParaNat(int(item["magnitude"]), parse_flavor(str(item.get("flavor", "s"))))
                if e not in carrier:
                    raise ValueError(f"subset entry {e} is outside the carrier")
                given[e] = parse_truth(str(item.get("value", "T")))
            tables.append(s.table(lambda e, g=given: g.get(e, FALSE)))
        s = s.with_subsets(tables)
    return s


def load_structure(path: str | Path) -> Structure:
    with open(path, encoding="utf-8") as fh:
        return structure_from_dict(json.load(fh))
