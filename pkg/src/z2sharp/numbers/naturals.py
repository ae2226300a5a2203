"""Flavored naturals: the elements of the carrier of every structure."""

from __future__ import annotations

from dataclasses import dataclass

from ..syntax.flavor import S, Flavor, enumeration_key, format_flavor, join
from ..truth import TruthValue, flavored_verdict


@dataclass(frozen=True, slots=True, order=False)
class ParaNat:
    magnitude: int
    flavor: Flavor = S

    def __post_init__(self):
        if self.magnitude < 0:
            raise ValueError("naturals have nonnegative magnitude")

    def sort_key(self) -> tuple[int, int]:
        return (self.magnitude, enumeration_key(self.flavor))

    def __str__(self) -> str:
        return f"{self.magnitude}_{format_flavor(self.flavor)}"


def zero(flavor: Flavor = S) -> ParaNat:
    return ParaNat(0, flavor)


def one(flavor: Flavor = S) -> ParaNat:
    return ParaNat(1, flavor)


def nat_add(x: ParaNat, y: ParaNat) -> ParaNat:
    return ParaNat(x.magnitude + y.magnitude, join(x.flavor, y.flavor))


def nat_mul(x: ParaNat, y: ParaNat) -> ParaNat:
    return ParaNat(x.magnitude * y.magnitude, join(x.flavor, y.flavor))


def nat_compare(x: ParaNat, y: ParaNat, alpha: Flavor, relation: str) -> TruthValue:
    """``x =alpha y`` or ``x <alpha y`` under the shared relation rule."""
    if relation == "=":
        holds = x.magnitude == y.magnitude
    elif relation == "<":
        holds = x.magnitude < y.magnitude
    elif relation == "<=":
        holds = x.magnitude <= y.magnitude
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return flavored_verdict(holds, alpha, x.flavor, y.flavor)
