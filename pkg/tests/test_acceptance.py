"""Acceptance suite: one test per criterion, each timed against its budget.

Every test records a ``PASS``/``FAIL criterion N`` line, printed directly and
repeated in the terminal summary. Run standalone with
``python tests/test_acceptance.py`` or ``pytest tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction
from itertools import product

import pytest

from z2sharp.axioms import check_group
from z2sharp.diagonal import CONTRADICTION, berry, meta_code, richard
from z2sharp.model import (
    Assignment, Classification, canonical_structure, classify, entails, evaluate,
    solve_comprehension,
)
from z2sharp.numbers import ContinuityCode, coherence_check, quad, rat
from z2sharp.numbers.rationals import (
    rat_add, rat_div, rat_inv, rat_mul, rat_neg, rat_sub,
)
from z2sharp.syntax import S, W, enumerate_formulas, free_vars, godel_number, pair, parse, wr
from z2sharp.syntax.ast import Eq, Lt, flavors_of
from z2sharp.truth import BOTH_W, FALSE, TRUE, both, iff, is_designated

from oracles import brute_force_berry, classical_eval, classical_view


def criterion(record_property, number, title, budget, check):
    start = time.perf_counter()
    error = None
    try:
        check()
    except Exception as exc:  # reported, then re-raised below
        error = exc
    elapsed = time.perf_counter() - start
    ok = error is None and elapsed < budget
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f}s of {budget}s)"
    record_property("criterion", line)
    print(line)
    if error is not None:
        raise error
    assert elapsed < budget, line


def test_criterion_1_classical_fragment(record_property):
    def check():
        s = canonical_structure(4, 0)
        carrier, sets = classical_view(s)
        by_pair = {(e.magnitude, e.flavor): e for e in s.carrier}
        pool = [f for f in enumerate_formulas(20_000, cap=100_000)
                if all(fl == S for fl in flavors_of(f))]
        rng = random.Random(1)
        formulas = rng.sample(pool, 1000)
        for f in formulas:
            nums, svars = free_vars(f)
            for _ in range(3):
                env = {v: rng.choice(carrier) for v in sorted(nums)}
                picks = {v: rng.randrange(len(sets)) for v in sorted(svars)}
                a = Assignment({v: by_pair[p] for v, p in env.items()},
                               {v: s.subsets[i] for v, i in picks.items()})
                expected = classical_eval(f, carrier, sets, env, {v: sets[i] for v, i in picks.items()})
                assert evaluate(s, a, f) == (TRUE if expected else FALSE), f

    criterion(record_property, 1, "classical fragment matches two-valued oracle", 10, check)


def test_criterion_2_axiom_soundness(record_property):
    def check():
        s = canonical_structure(8, 2)
        for family in ("i", "ii", "iii"):
            report = check_group(s, family)
            assert report.passed and report.checked > 0, report.summary()

    criterion(record_property, 2, "axiom groups i, ii, iii sound on canonical(8,2)", 30, check)


def test_criterion_3_non_explosion(record_property):
    def check():
        s = canonical_structure(4, 0)
        contradictory = s.table(lambda e: BOTH_W)
        a = Assignment({"n": s.carrier[1]}, {"X": contradictory})
        premise = parse("n in_w X & !(n in_w X)")
        assert is_designated(evaluate(s, a, premise))
        atoms = [f for f in enumerate_formulas(2000)
                 if isinstance(f, (Eq, Lt)) and not any(free_vars(f))
                 and evaluate(s, None, f) == FALSE]
        for q in random.Random(3).sample(atoms, 10):
            assert not entails(s, [premise], q, a), q

    criterion(record_property, 3, "contradiction entails no unrelated atom", 1, check)


def test_criterion_4_russell(record_property):
    def check():
        s = canonical_structure(3, 1)
        phi = parse("!(n in_w X)")
        table = solve_comprehension(s, phi, "v.1")
        assert all(v == BOTH_W for _, v in table.entries)
        for e in s.carrier:
            rhs = evaluate(s, Assignment({"n": e}, {"X": table}), phi)
            assert is_designated(iff(s.mem(e, table, W), rhs))
        ranked = solve_comprehension(s, phi, "v.3", rank=0)
        assert classify(s, ranked) == Classification("StrictRankedInconsistent", 0)

    criterion(record_property, 4, "Russell set is all-Both and strictly ranked at 0", 1, check)


def test_criterion_5_berry(record_property):
    def check():
        s = canonical_structure(8, 2)
        g = meta_code()
        for k in (0, 40, 10_000, g - 1):
            report = berry(s, k)
            assert not report.contradiction and report.membership_value == FALSE
        for k in (g, g + 1):
            report = berry(s, k)
            assert report.contradiction
            assert report.membership_value == both(wr(0)) == CONTRADICTION
            _, least = brute_force_berry(s, k)
            assert (report.B_k.magnitude, report.B_k.flavor) == least

    criterion(record_property, 5, "Berry number contradictory exactly from g*", 60, check)


def test_criterion_6_richard(record_property):
    def check():
        rng = random.Random(6)
        tables = [[rng.randint(0, 9) for _ in range(p + rng.randint(0, 4))] for p in range(1, 11)]
        report = richard(tables)
        for p, table in enumerate(tables, start=1):
            assert report.diagonal.digits[p - 1] != table[p - 1]
        assert report.mismatches == tuple(range(1, 11))
        assert report.self_membership == both(wr(0))

    criterion(record_property, 6, "Richard diagonal differs from every table", 1, check)


def test_criterion_7_field_laws(record_property):
    def check():
        rng = random.Random(7)
        qs = [rat(rng.randint(-10**6, 10**6), rng.randint(1, 10**6)) for _ in range(500)]
        zero, one = rat(0), rat(1)
        for i, a in enumerate(qs):
            b, c = qs[(i * 7 + 1) % 500], qs[(i * 13 + 2) % 500]
            assert rat_add(a, b) == rat_add(b, a)
            assert rat_mul(a, b) == rat_mul(b, a)
            assert rat_add(rat_add(a, b), c) == rat_add(a, rat_add(b, c))
            assert rat_mul(rat_mul(a, b), c) == rat_mul(a, rat_mul(b, c))
            assert rat_mul(a, rat_add(b, c)) == rat_add(rat_mul(a, b), rat_mul(a, c))
            assert rat_add(a, zero) == a and rat_mul(a, one) == a
            assert rat_add(a, rat_neg(a)) == zero and rat_sub(a, a) == zero
            if a.num:
                assert rat_mul(a, rat_inv(a)) == one
                q = rat_div(b, a)
                assert Fraction(q.num, q.den) == Fraction(b.num, b.den) / Fraction(a.num, a.den)

    criterion(record_property, 7, "500 rationals satisfy the field laws", 5, check)


def test_criterion_8_injectivity(record_property):
    def check():
        codes = {pair(a, b) for a, b in product(range(101), repeat=2)}
        assert len(codes) == 101 * 101
        pool = enumerate_formulas(10_000)
        numbers = [godel_number(f) for f in pool]
        assert len(set(numbers)) == len(pool)
        assert len(set(pool)) == len(pool)

    criterion(record_property, 8, "pair and Gödel numbering are collision-free", 30, check)


def test_criterion_9_coherence(record_property):
    def line(p, q):
        return abs(p - q)

    def check():
        empty = coherence_check(ContinuityCode.of([]), line, line)
        assert empty.value == TRUE and empty.coherent and empty.violations == ()
        bad = coherence_check(ContinuityCode.of([quad(0, 1, 0, 1), quad(0, 1, 3, 1)]), line, line)
        assert not bad.coherent and bad.value == FALSE
        assert {cond for cond, _ in bad.violations} == {1}
        ident = coherence_check(ContinuityCode.of([quad(p, 1, p, 2) for p in range(3)]), line, line)
        assert ident.coherent and ident.value == TRUE and ident.violations == ()

    criterion(record_property, 9, "coherence checker on empty, violating and identity codes", 1, check)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
