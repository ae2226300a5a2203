"""The ranked paraconsistent truth lattice.

Values are True, False and Both(flavor), where the flavor of a Both value is
W, W(n) or W[n]. The values form a chain

    False < Both(W[n]) < Both(W(n)) < Both(W) < True

in which, inside each ranked family, a higher rank sits closer to False
(a deeper contradiction). Conjunction and disjunction are min and max on
this chain; negation swaps True and False and fixes every Both value.
True and every Both value are designated.

The tables are LP-style choices and are kept together here so they can be
replaced as a unit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .syntax.flavor import S, STRICT, W, WRANKED, Flavor, format_flavor, parse_flavor


@dataclass(frozen=True, slots=True)
class TruthValue:
    """``tag`` is "T", "F" or "B"; ``flavor`` is set exactly for "B"."""

    tag: str
    flavor: Flavor | None = None
    key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.tag in ("T", "F"):
            if self.flavor is not None:
                raise ValueError("classical values carry no flavor")
        elif self.tag == "B":
            if self.flavor is None or self.flavor == S:
                raise ValueError("Both needs a flavor W, W(n) or W[n]")
        else:
            raise ValueError(f"unknown truth tag {self.tag!r}")
        object.__setattr__(self, "key", _order_key(self))

    @property
    def is_classical(self) -> bool:
        return self.tag != "B"

    @property
    def is_both(self) -> bool:
        return self.tag == "B"

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return render(self)


def _order_key(v: TruthValue) -> tuple:
    if v.tag == "F":
        return (0, 0)
    if v.tag == "T":
        return (4, 0)
    f = v.flavor
    if f.kind == STRICT:
        return (1, -f.rank)
    if f.kind == WRANKED:
        return (2, -f.rank)
    return (3, 0)


TRUE = TruthValue("T")
FALSE = TruthValue("F")


def both(flavor: Flavor) -> TruthValue:
    return TruthValue("B", flavor)


BOTH_W = both(W)


def classical(b: bool) -> TruthValue:
    return TRUE if b else FALSE


def negate(v: TruthValue) -> TruthValue:
    if v.tag == "T":
        return FALSE
    if v.tag == "F":
        return TRUE
    return v


def conjoin(a: TruthValue, b: TruthValue) -> TruthValue:
    return a if a.key <= b.key else b


def disjoin(a: TruthValue, b: TruthValue) -> TruthValue:
    return a if a.key >= b.key else b


def implies(a: TruthValue, b: TruthValue) -> TruthValue:
    return disjoin(negate(a), b)


def iff(a: TruthValue, b: TruthValue) -> TruthValue:
    return conjoin(implies(a, b), implies(b, a))


def is_designated(v: TruthValue) -> bool:
    return v.tag != "F"


def apply_rank(v: TruthValue, op: Flavor) -> TruthValue:
    """The rank operators (.)^(n) and (.)^[n]: re-tag contradictory values,
    pass classical values through."""
    if not op.is_ranked:
        raise ValueError("rank operators take w(n) or w[n]")
    if v.tag == "B":
        return both(op)
    return v


def flavored_verdict(holds: bool, alpha: Flavor, left: Flavor, right: Flavor) -> TruthValue:
    """Truth of a flavored relation whose classical content is ``holds``.

    A relation that holds is True. One that fails is False for the strict
    flavor S, and Both(alpha) when alpha is non-S and matches the flavor of
    one of the operands, so a flavored fact is contradictory only at its
    own level.
    """
    if holds:
        return TRUE
    if alpha.kind != "s" and (alpha == left or alpha == right):
        return both(alpha)
    return FALSE


def all_values(max_rank: int) -> list[TruthValue]:
    """Every truth value whose rank is at most ``max_rank``, in chain order."""
    vals = [FALSE, TRUE, BOTH_W]
    for r in range(max_rank + 1):
        vals += [both(Flavor(WRANKED, r)), both(Flavor(STRICT, r))]
    return sorted(vals, key=lambda v: v.key)


def render(v: TruthValue) -> str:
    """``T``, ``F``, ``B_w``, ``B_w(n)`` or ``B_w[n]``."""
    if v.tag != "B":
        return v.tag
    return f"B_{format_flavor(v.flavor)}"


def parse_truth(text: str) -> TruthValue:
    text = text.strip()
    if text in ("T", "true", "True"):
        return TRUE
    if text in ("F", "false", "False"):
        return FALSE
    if text.startswith("B_"):
        return both(parse_flavor(text[2:]))
    raise ValueError(f"malformed truth value {text!r}")
