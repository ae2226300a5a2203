"""Flavored integers as canonical pairs of naturals: (a, b) stands for a - b."""

from __future__ import annotations

from dataclasses import dataclass

from ..syntax.flavor import S, Flavor, join
from .naturals import ParaNat


@dataclass(frozen=True, slots=True)
class ParaInt:
    pos: int
    neg: int
    flavor: Flavor = S

    def __post_init__(self):
        if self.pos < 0 or self.neg < 0:
            raise ValueError("integer pair components are naturals")
        if min(self.pos, self.neg):
            raise ValueError("ParaInt must be canonical; use make_int")

    @property
    def value(self) -> int:
        return self.pos - self.neg

    @classmethod
    def from_int(cls, n: int, flavor: Flavor = S) -> "ParaInt":
        return cls(max(n, 0), max(-n, 0), flavor)

    @classmethod
    def from_nat(cls, m: ParaNat) -> "ParaInt":
        return cls(m.magnitude, 0, m.flavor)


def make_int(a: int, b: int, flavor: Flavor = S) -> ParaInt:
    """The canonical representative of the pair (a, b): one component zero."""
    m = min(a, b)
    return ParaInt(a - m, b - m, flavor)


def int_add(x: ParaInt, y: ParaInt) -> ParaInt:
    return make_int(x.pos + y.pos, x.neg + y.neg, join(x.flavor, y.flavor))


def int_neg(x: ParaInt) -> ParaInt:
    return ParaInt(x.neg, x.pos, x.flavor)


def int_mul(x: ParaInt, y: ParaInt) -> ParaInt:
    return make_int(x.pos * y.pos + x.neg * y.neg, x.pos * y.neg + x.neg * y.pos,
                    join(x.flavor, y.flavor))
