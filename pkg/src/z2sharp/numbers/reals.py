"""Truncated flavored reals and the finite Cauchy test.

A real is either a finite table of decimal digits after the point, or a
sequence of rationals given by a function of the index. True limits are not
computable, so every comparison takes an explicit depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from ..errors import DepthExceeded
from ..syntax.flavor import S, Flavor
from ..truth import FALSE, TRUE, TruthValue, both, conjoin, disjoin, implies
from .rationals import ParaRat, abs_value, rat, rat_compare, rat_sub


@dataclass(frozen=True, slots=True)
class ParaReal:
    """``digits`` holds the expansion 0.d1 d2 d3 ...; alternatively
    ``sequence(k)`` yields the k-th rational approximation (k >= 1) up to
    ``precision`` terms."""

    digits: tuple[int, ...] | None = None
    flavor: Flavor = S
    sequence: Callable[[int], ParaRat] | None = None
    precision: int = 0

    def __post_init__(self):
        if (self.digits is None) == (self.sequence is None):
            raise ValueError("a real has exactly one of digits or sequence")
        if self.digits is not None:
            if not self.digits:
                raise ValueError("a digit real needs at least one digit")
            if any(not (0 <= d <= 9) for d in self.digits):
                raise ValueError("digits lie in 0..9")
        elif self.precision < 1:
            raise ValueError("a sequence real needs a precision of at least 1")

    @classmethod
    def from_digits(cls, digits: Sequence[int], flavor: Flavor = S) -> "ParaReal":
        return cls(digits=tuple(digits), flavor=flavor)

    @property
    def depth(self) -> int:
        return len(self.digits) if self.digits is not None else self.precision

    def approximation(self, k: int) -> ParaRat:
        """The k-th approximant: the first k digits, or sequence(k)."""
        if k < 1 or k > self.depth:
            raise DepthExceeded(f"real is only available to depth {self.depth}")
        if self.digits is not None:
            value = int("".join(map(str, self.digits[:k])))
            return rat(value, 10 ** k, self.flavor)
        return self.sequence(k)

    def __str__(self) -> str:
        if self.digits is not None:
            return "0." + "".join(map(str, self.digits))
        return f"<sequence real to {self.precision} terms>"


def read_digit_file(path: str | Path, flavor: Flavor = S) -> ParaReal:
    """Read a digit file: a ``0.`` header line, then one digit per byte.
    Whitespace between digits is ignored."""
    text = Path(path).read_text(encoding="utf-8")
    header, _, body = text.partition("\n")
    if header.strip() != "0.":
        raise ValueError(f"{path}: first line must be '0.'")
    digits = []
    for ch in body:
        if ch.isspace():
            continue
        if not ch.isdigit():
            raise ValueError(f"{path}: unexpected character {ch!r}")
        digits.append(int(ch))
    return ParaReal.from_digits(digits, flavor)


def real_compare(x: ParaReal, y: ParaReal, alpha: Flavor = S, depth: int = 1,
                 relation: str = "=") -> TruthValue:
    """Compare two reals to ``depth``.

    Digit reals are decided by their first ``depth`` digits; sequence reals
    by whether their depth-th approximants differ by at least 10**-depth.
    A decided comparison is classical. When the reals agree to the depth
    and alpha is non-S and matches one operand's flavor, the verdict is
    Both(alpha): the undecided window is where a flavored contradiction
    lives. Otherwise agreement means equal and not less.
    """
    if relation not in ("=", "<"):
        raise ValueError(f"unknown relation {relation!r}")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if depth > x.depth or depth > y.depth:
        raise DepthExceeded(f"depth {depth} exceeds available precision")
    if x.digits is not None and y.digits is not None:
        a, b = x.digits[:depth], y.digits[:depth]
        order = (a > b) - (a < b)
    else:
        diff = rat_sub(x.approximation(depth), y.approximation(depth))
        window = rat(1, 10 ** depth)
        if rat_compare(abs_value(diff), window, S, "<") is TRUE:
            order = 0
        else:
            order = 1 if diff.num > 0 else -1
    if order != 0:
        if relation == "=":
            return FALSE
        return TRUE if order < 0 else FALSE
    if alpha != S and alpha in (x.flavor, y.flavor):
        return both(alpha)
    return TRUE if relation == "=" else FALSE


def cauchy_check(prefix: Sequence[ParaRat], epsilons: Sequence[ParaRat],
                 alpha: Flavor = S) -> TruthValue:
    """Finite Cauchy test: for each listed epsilon with 0 < epsilon there is
    an index m in the first half of the prefix such that every later term
    lies within epsilon of term m. Quantifiers are read as conjunctions and
    disjunctions of truth values, so flavored inputs yield flavored verdicts.
    """
    if len(prefix) < 2:
        raise ValueError("a Cauchy prefix needs at least two terms")
    zero = rat(0, 1, alpha)
    result = TRUE
    half = (len(prefix) + 1) // 2
    for eps in epsilons:
        exists = FALSE
        for m in range(half):
            forall = TRUE
            for n in range(m + 1, len(prefix)):
                dist = abs_value(rat_sub(prefix[m], prefix[n]), alpha)
                forall = conjoin(forall, rat_compare(dist, eps, alpha, "<"))
                if forall is FALSE:
                    break
            exists = disjoin(exists, forall)
            if exists is TRUE:
                break
        result = conjoin(result, implies(rat_compare(zero, eps, alpha, "<"), exists))
    return result
