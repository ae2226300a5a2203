"""Flavored rationals in lowest terms with a positive denominator."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from ..errors import ZeroDenominator
from ..syntax.flavor import S, Flavor, format_flavor, join, parse_flavor
from ..truth import TRUE, TruthValue, flavored_verdict
from .integers import ParaInt


@dataclass(frozen=True, slots=True)
class ParaRat:
    num: int
    den: int = 1
    flavor: Flavor = S

    def __post_init__(self):
        if self.den <= 0 or gcd(self.num, self.den) != 1:
            raise ValueError("ParaRat must be canonical; use rat_canonicalize")

    @property
    def numerator(self) -> ParaInt:
        return ParaInt.from_int(self.num, self.flavor)

    @property
    def denominator(self) -> ParaInt:
        return ParaInt.from_int(self.den, self.flavor)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}@{format_flavor(self.flavor)}"


def rat_canonicalize(a: int, b: int, flavor: Flavor = S) -> ParaRat:
    """The lowest-terms representative of a/b. A negative ``b`` moves its
    sign to the numerator."""
    if b == 0:
        raise ZeroDenominator("rational with zero denominator")
    if b < 0:
        a, b = -a, -b
    g = gcd(a, b)
    return ParaRat(a // g, b // g, flavor)


def rat(a: int, b: int = 1, flavor: Flavor = S) -> ParaRat:
    return rat_canonicalize(a, b, flavor)


def as_rat(value, flavor: Flavor = S) -> ParaRat:
    """Coerce an int, Fraction or ParaRat to a ParaRat."""
    if isinstance(value, ParaRat):
        return value
    if isinstance(value, int):
        return ParaRat(value, 1, flavor)
    num, den = value.numerator, value.denominator
    return rat_canonicalize(num, den, flavor)


def rat_add(x: ParaRat, y: ParaRat) -> ParaRat:
    return rat_canonicalize(x.num * y.den + x.den * y.num, x.den * y.den,
                            join(x.flavor, y.flavor))


def rat_neg(x: ParaRat) -> ParaRat:
    return ParaRat(-x.num, x.den, x.flavor)


def rat_sub(x: ParaRat, y: ParaRat) -> ParaRat:
    return rat_add(x, rat_neg(y))


def rat_mul(x: ParaRat, y: ParaRat) -> ParaRat:
    return rat_canonicalize(x.num * y.num, x.den * y.den, join(x.flavor, y.flavor))


def rat_inv(x: ParaRat) -> ParaRat:
    if x.num == 0:
        raise ZeroDenominator("zero has no inverse")
    return rat_canonicalize(x.den, x.num, x.flavor)


def rat_div(x: ParaRat, y: ParaRat) -> ParaRat:
    return rat_mul(x, rat_inv(y))


def rat_compare(x: ParaRat, y: ParaRat, alpha: Flavor = S, relation: str = "<") -> TruthValue:
    """``x <alpha y``, ``x =alpha y`` or ``x <=alpha y`` by cross-multiplication,
    under the shared relation rule for flavors."""
    lhs, rhs = x.num * y.den, y.num * x.den
    if relation == "<":
        holds = lhs < rhs
    elif relation == "=":
        holds = lhs == rhs
    elif relation == "<=":
        holds = lhs <= rhs
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return flavored_verdict(holds, alpha, x.flavor, y.flavor)


def abs_value(q: ParaRat, alpha: Flavor = S) -> ParaRat:
    """``|q|_alpha``: q when ``0 <=alpha q`` is True, otherwise -q.

    The comparison is contradictory only when q is negative, so a Both
    verdict takes the -q branch; the result is never negative.
    """
    zero = ParaRat(0, 1, alpha)
    if rat_compare(zero, q, alpha, "<=") == TRUE:
        return q
    return rat_neg(q)


_LITERAL_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(-?\d+))?\s*@\s*(s|w(?:\(\s*-?\d+\s*\)|\[\s*-?\d+\s*\])?)\s*")


def parse_rat(text: str) -> ParaRat:
    """Parse a literal ``a/b@flavor`` such as ``3/4@s`` or ``1/2@w(2)``."""
    m = _LITERAL_RE.fullmatch(text)
    if not m:
        raise ValueError(f"malformed rational literal {text!r}")
    a, b, fl = m.groups()
    return rat_canonicalize(int(a), int(b) if b else 1, parse_flavor(fl.replace(" ", "")))


_EXPR_TOKEN = re.compile(
    r"\s*(?:(?P<lit>\d+(?:\s*/\s*\d+)?\s*@\s*(?:s|w(?:\(\s*\d+\s*\)|\[\s*\d+\s*\])?))|(?P<op>[-+*/()]))"
)


def eval_rat_expr(text: str) -> ParaRat:
    """Evaluate an expression over rational literals with ``+ - * /``,
    unary minus and parentheses. Literals are written ``a/b@flavor``; the
    ``@flavor`` suffix tells a literal's slash apart from division."""
    tokens: list[tuple[str, object]] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _EXPR_TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot read rational expression at offset {pos}: {text[pos:]!r}")
        if m.group("lit"):
            tokens.append(("lit", parse_rat(m.group("lit"))))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def advance():
        nonlocal i
        i += 1
        return tokens[i - 1]

    def expr():
        value = product()
        while peek() in (("op", "+"), ("op", "-")):
            op = advance()[1]
            rhs = product()
            value = rat_add(value, rhs) if op == "+" else rat_sub(value, rhs)
        return value

    def product():
        value = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = advance()[1]
            rhs = unary()
            value = rat_mul(value, rhs) if op == "*" else rat_div(value, rhs)
        return value

    def unary():
        if peek() == ("op", "-"):
            advance()
            return rat_neg(unary())
        kind, val = advance()
        if kind == "lit":
            return val
        if (kind, val) == ("op", "("):
            value = expr()
            if advance() != ("op", ")"):
                raise ValueError("unbalanced parentheses in rational expression")
            return value
        raise ValueError(f"unexpected {val!r} in rational expression")

    result = expr()
    if peek()[0] != "end":
        raise ValueError("trailing input in rational expression")
    return result
