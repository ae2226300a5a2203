"""Independent reference implementations used as test oracles.

Apart from ``brute_force_berry``, nothing here calls into the evaluation,
arithmetic or canonicalization code under test; the oracles work on plain
Python tuples, ints and sets. The Berry scan reuses the evaluator for the
truth value at each element but does its own search for defined elements.
"""

from __future__ import annotations

from itertools import product

from z2sharp.syntax.ast import (
    Add, And, Const, Eq, ExistsNum, ExistsSet, ForallNum, ForallSet, Iff,
    Implies, Lt, Mem, Mul, Not, NumVar, Or,
)


# Classical two-valued evaluation. Elements are (magnitude, flavor) pairs;
# arithmetic adds magnitudes and keeps the "worse" flavor by a hand-written
# ranking. Sets are Python sets of elements.

def _badness(flavor) -> tuple:
    kind = flavor.kind
    rank = flavor.rank or 0
    return {"s": (0, 0), "w": (1, 0), "w()": (2, rank), "w[]": (3, rank)}[kind]


def classical_term(t, env):
    if isinstance(t, NumVar):
        return env[t.name]
    if isinstance(t, Const):
        return (t.value, t.flavor)
    a = classical_term(t.left, env)
    b = classical_term(t.right, env)
    flavor = a[1] if _badness(a[1]) >= _badness(b[1]) else b[1]
    mag = a[0] + b[0] if isinstance(t, Add) else a[0] * b[0]
    return (mag, flavor)


def classical_eval(f, carrier, set_range, env, senv) -> bool:
    """Two-valued evaluation of an S-only formula.

    ``carrier`` is a list of (magnitude, flavor) pairs and ``set_range`` a
    list of Python sets of such pairs.
    """
    ev = lambda g: classical_eval(g, carrier, set_range, env, senv)  # noqa: E731
    if isinstance(f, Eq):
        return classical_term(f.left, env)[0] == classical_term(f.right, env)[0]
    if isinstance(f, Lt):
        return classical_term(f.left, env)[0] < classical_term(f.right, env)[0]
    if isinstance(f, Mem):
        return classical_term(f.term, env) in senv[f.set_var]
    if isinstance(f, Not):
        return not ev(f.body)
    if isinstance(f, And):
        return ev(f.left) and ev(f.right)
    if isinstance(f, Or):
        return ev(f.left) or ev(f.right)
    if isinstance(f, Implies):
        return (not ev(f.left)) or ev(f.right)
    if isinstance(f, Iff):
        return ev(f.left) == ev(f.right)
    if isinstance(f, (ForallNum, ExistsNum)):
        results = (classical_eval(f.body, carrier, set_range, {**env, f.var: e}, senv) for e in carrier)
        return all(results) if isinstance(f, ForallNum) else any(results)
    if isinstance(f, (ForallSet, ExistsSet)):
        results = (classical_eval(f.body, carrier, set_range, env, {**senv, f.var: x}) for x in set_range)
        return all(results) if isinstance(f, ForallSet) else any(results)
    raise TypeError(f"unexpected node {f!r}")


def all_assignments(names, values):
    for combo in product(values, repeat=len(names)):
        yield dict(zip(names, combo))


# Rationals: the minimum representative of an equivalence class, by search.

def class_minimum(a: int, b: int, bound: int = 100) -> tuple[int, int]:
    """Among pairs (c, d) with 0 < d <= b and a*d == b*c, the one with the
    smallest denominator. Brute force; b must be positive."""
    for d in range(1, b + 1):
        for c in range(-abs(a) - 1, abs(a) + 2):
            if a * d == b * c:
                return (c, d)
    raise AssertionError("no representative found")


# Arithmetic by repetition.

def power_by_repetition(m: int, e: int) -> int:
    out = 1
    for _ in range(e):
        out *= m
    return out


def min_magnitude(elements):
    """Brute-force minimum: the element no other element is below."""
    elements = list(elements)
    for e in elements:
        if all(e[0] <= x[0] for x in elements):
            return e
    return None


def classical_view(structure):
    """Plain-data copy of a structure for ``classical_eval``: carrier pairs
    and, per subset, the set of elements whose entry is not False."""
    carrier = [(e.magnitude, e.flavor) for e in structure.carrier]
    sets = [{(e.magnitude, e.flavor) for e, v in t.entries if v.tag != "F"}
            for t in structure.subsets]
    return carrier, sets


def brute_force_berry(structure, k):
    """A_k and B_k by direct scanning: a formula defines e when e is the
    only W-flavored element where it is True."""
    from z2sharp.model import evaluate
    from z2sharp.syntax import W, enumerate_formulas, free_vars
    from z2sharp.truth import TRUE

    w_slice = structure.slice(W)
    defined = set()
    for f in enumerate_formulas(min(k, 10_000)):
        nums, sets = free_vars(f)
        if len(nums) != 1 or sets:
            continue
        (v,) = nums
        hits = [e for e in w_slice if evaluate(structure, {v: e}, f) == TRUE]
        if len(hits) == 1:
            defined.add(hits[0])
    rest = [(e.magnitude, e.flavor) for e in w_slice if e not in defined]
    return defined, min_magnitude(rest)
