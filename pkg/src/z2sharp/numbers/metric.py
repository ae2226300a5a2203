"""Finite checks for metric axioms and for the coherence conditions of
codes of continuous functions between metric spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence

from ..syntax.flavor import S, Flavor
from ..truth import FALSE, TRUE, TruthValue, conjoin, is_designated
from .rationals import ParaRat, as_rat, rat_add, rat_compare

Point = Hashable
Metric = Callable[[Point, Point], object]


@dataclass(frozen=True)
class MetricReport:
    flavor: Flavor
    violations: tuple[tuple[str, tuple], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def metric_axioms_check(points: Sequence[Point], d: Metric, alpha: Flavor = S) -> MetricReport:
    """Check identity, nonnegativity, symmetry and the triangle inequality
    of ``d`` on ``points``, each under flavor-alpha designation.

    Distinct points at distance zero are admitted (pseudometrics pass).
    """
    pts = list(points)
    zero = ParaRat(0, 1, alpha)
    dist = {(a, b): as_rat(d(a, b), alpha) for a in pts for b in pts}
    bad: list[tuple[str, tuple]] = []

    def holds(x, y, rel):
        return is_designated(rat_compare(x, y, alpha, rel))

    for a in pts:
        if not holds(dist[a, a], zero, "="):
            bad.append(("identity", (a,)))
    for a, b in product(pts, pts):
        if not holds(zero, dist[a, b], "<="):
            bad.append(("nonnegativity", (a, b)))
        if not holds(dist[a, b], dist[b, a], "="):
            bad.append(("symmetry", (a, b)))
    for a, b, c in product(pts, pts, pts):
        if not holds(dist[a, c], rat_add(dist[a, b], dist[b, c]), "<="):
            bad.append(("triangle", (a, b, c)))
    return MetricReport(alpha, tuple(bad))


@dataclass(frozen=True, slots=True)
class Quad:
    """One entry (a, r, b, s) of a continuity code: the ball of radius r
    around a is sent into the ball of radius s around b."""

    a: Point
    r: ParaRat
    b: Point
    s: ParaRat


def quad(a, r, b, s, flavor: Flavor = S) -> Quad:
    return Quad(a, as_rat(r, flavor), b, as_rat(s, flavor))


@dataclass(frozen=True)
class ContinuityCode:
    quads: frozenset
    flavor: Flavor = S

    @classmethod
    def of(cls, quads: Iterable[Quad], flavor: Flavor = S) -> "ContinuityCode":
        return cls(frozenset(quads), flavor)


@dataclass(frozen=True)
class CoherenceReport:
    value: TruthValue
    violations: tuple[tuple[int, tuple], ...] = field(default=())

    @property
    def coherent(self) -> bool:
        return is_designated(self.value)


def _default_universe(code: ContinuityCode):
    sources = {q.a for q in code.quads}
    targets = {q.b for q in code.quads}
    radii = {q.r for q in code.quads} | {q.s for q in code.quads}
    return sources, targets, radii


def coherence_check(code: ContinuityCode, dA: Metric, dB: Metric,
                    universe: tuple | None = None) -> CoherenceReport:
    """Evaluate the three coherence conditions of a continuity code.

    1. (a,r,b,s) and (a,r,b',s') in the code imply dB(b,b') < s + s'.
    2. (a,r,b,s) in the code and dB(b,b') + s < s' imply (a,r,b',s') in it.
    3. (a,r,b,s) in the code and dA(a,a') + r' < r imply (a',r',b,s) in it.

    Conditions 2 and 3 are closure obligations; they range over a finite
    universe ``(sources, targets, radii)``, by default every point and
    radius that occurs in the code. Each condition instance is read as an
    implication between truth values in the code's flavor.
    """
    alpha = code.flavor
    quads = sorted(code.quads, key=repr)
    members = set(code.quads)
    sources, targets, radii = universe or _default_universe(code)
    sources, targets, radii = sorted(sources, key=repr), sorted(targets, key=repr), sorted(radii, key=repr)
    value = TRUE
    bad: list[tuple[int, tuple]] = []

    def record(cond, verdict, witness):
        nonlocal value
        value = conjoin(value, verdict)
        if not is_designated(verdict):
            bad.append((cond, witness))

    for q1 in quads:
        for q2 in quads:
            if q1.a == q2.a and q1.r == q2.r:
                d = as_rat(dB(q1.b, q2.b), alpha)
                record(1, rat_compare(d, rat_add(q1.s, q2.s), alpha, "<"), (q1, q2))
    for q in quads:
        for b2 in targets:
            for s2 in radii:
                premise = rat_compare(rat_add(as_rat(dB(q.b, b2), alpha), q.s), s2, alpha, "<")
                if is_designated(premise):
                    target = Quad(q.a, q.r, b2, s2)
                    record(2, TRUE if target in members else FALSE, (q, target))
        for a2 in sources:
            for r2 in radii:
                premise = rat_compare(rat_add(as_rat(dA(q.a, a2), alpha), r2), q.r, alpha, "<")
                if is_designated(premise):
                    target = Quad(a2, r2, q.b, q.s)
                    record(3, TRUE if target in members else FALSE, (q, target))
    return CoherenceReport(value, tuple(bad))
