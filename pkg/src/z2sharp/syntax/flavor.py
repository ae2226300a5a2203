"""Consistency flavors: the s / w / w(n) / w[n] subscripts carried by every
relation, constant and contradictory truth value."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import RankError

S_KIND = "s"
W_KIND = "w"
WRANKED = "w()"
STRICT = "w[]"

_KINDS = (S_KIND, W_KIND, WRANKED, STRICT)


@dataclass(frozen=True, slots=True)
class Flavor:
    kind: str
    rank: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown flavor kind {self.kind!r}")
        ranked = self.kind in (WRANKED, STRICT)
        if ranked:
            if not isinstance(self.rank, int) or isinstance(self.rank, bool):
                raise RankError(f"flavor {self.kind} needs an integer rank")
            if self.rank < 0:
                raise RankError(f"negative rank {self.rank}")
        elif self.rank is not None:
            raise RankError(f"flavor {self.kind} takes no rank")

    @property
    def is_ranked(self) -> bool:
        return self.kind in (WRANKED, STRICT)

    @property
    def is_strict(self) -> bool:
        return self.kind == STRICT

    def __str__(self) -> str:
        return format_flavor(self)

    def __repr__(self) -> str:
        return f"Flavor({format_flavor(self)})"


S = Flavor(S_KIND)
W = Flavor(W_KIND)


def wr(rank: int) -> Flavor:
    """Weakly inconsistent flavor with the given rank, ``w(rank)``."""
    return Flavor(WRANKED, rank)


def sr(rank: int) -> Flavor:
    """Strictly inconsistent flavor with the given rank, ``w[rank]``."""
    return Flavor(STRICT, rank)


def format_flavor(f: Flavor) -> str:
    if f.kind == WRANKED:
        return f"w({f.rank})"
    if f.kind == STRICT:
        return f"w[{f.rank}]"
    return f.kind


_FLAVOR_RE = re.compile(r"^(s|w)(?:\((-?\d+)\)|\[(-?\d+)\])?$")


def parse_flavor(text: str) -> Flavor:
    """Parse ``s``, ``w``, ``w(N)`` or ``w[N]`` (the CLI and literal syntax)."""
    m = _FLAVOR_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed flavor {text!r}")
    base, paren, bracket = m.groups()
    if base == "s":
        if paren is not None or bracket is not None:
            raise RankError("flavor s takes no rank")
        return S
    if paren is not None:
        return wr(int(paren))
    if bracket is not None:
        return sr(int(bracket))
    return W


def enumeration_key(f: Flavor) -> int:
    """Position in the fixed enumeration order S, W, W(0), W[0], W(1), W[1], ..."""
    if f.kind == S_KIND:
        return 0
    if f.kind == W_KIND:
        return 1
    return 2 + 2 * f.rank + (1 if f.kind == STRICT else 0)


def flavors_up_to(max_rank: int) -> list[Flavor]:
    """All flavors with rank at most ``max_rank``, in enumeration order."""
    out = [S, W]
    for r in range(max_rank + 1):
        out += [wr(r), sr(r)]
    return out


def inconsistency_key(f: Flavor) -> tuple[int, int]:
    # S weakest, then W, then W(n) by rank, then W[n] by rank (strongest).
    if f.kind == S_KIND:
        return (0, 0)
    if f.kind == W_KIND:
        return (1, 0)
    if f.kind == WRANKED:
        return (2, f.rank)
    return (3, f.rank)


def join(a: Flavor, b: Flavor) -> Flavor:
    """Flavor of a mixed-flavor arithmetic result: the more inconsistent operand."""
    return a if inconsistency_key(a) >= inconsistency_key(b) else b
