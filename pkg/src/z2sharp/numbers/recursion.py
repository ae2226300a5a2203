"""Primitive recursion over flavored naturals."""

from __future__ import annotations

from typing import Callable, TypeVar

from ..errors import DepthExceeded
from .naturals import ParaNat, nat_mul

V = TypeVar("V")

DEFAULT_DEPTH = 100_000


def prim_rec(f: Callable[[object], V], g: Callable[[ParaNat, object, V], V],
             n: ParaNat, m, max_depth: int = DEFAULT_DEPTH) -> V:
    """h(0, m) = f(m); h(k + 1, m) = g(k, m, h(k, m)), evaluated at n.

    The counter k passed to ``g`` carries n's flavor, so a recursion along
    a flavored successor chain stays on that chain.
    """
    if n.magnitude > max_depth:
        raise DepthExceeded(f"recursion depth {n.magnitude} exceeds {max_depth}")
    acc = f(m)
    for k in range(n.magnitude):
        acc = g(ParaNat(k, n.flavor), m, acc)
    return acc


def nat_pow(m: ParaNat, e: ParaNat, max_depth: int = DEFAULT_DEPTH) -> ParaNat:
    """m ** e with base case m ** 0 = 1 in the exponent's flavor."""
    return prim_rec(lambda _m: ParaNat(1, e.flavor),
                    lambda _k, base, acc: nat_mul(acc, base), e, m, max_depth)
