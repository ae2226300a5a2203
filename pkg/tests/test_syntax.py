from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from z2sharp.errors import ParseError, RankError, ResourceError, SortError
from z2sharp.syntax import (
    Add, And, Const, Eq, ExistsNum, ExistsSet, ForallNum, ForallSet, Iff,
    Implies, Lt, Mem, Mul, Not, NumVar, Or, RankOp, S, W, alpha_equal,
    enumerate_formulas, formula_of_code, free_vars, godel_number, node_count,
    pair, parse, parse_term, print_formula, sr, substitute, universal_closure,
    unpair, wr,
)
from z2sharp.syntax.flavor import enumeration_key, flavors_up_to, join
from z2sharp.syntax.godel import deserialize, in_pool, serialize

from oracles import classical_eval

x, y, n, m, k = (NumVar(v) for v in "xynmk")
ZERO_S, ONE_S = Const(0, S), Const(1, S)


@pytest.fixture(scope="module")
def pool_10k():
    return enumerate_formulas(10_000)


# Parsing and printing


def test_parse_additive_identity_axiom():
    f = parse("forall n. n + 0_s =s n")
    assert f == ForallNum("n", Eq(Add(n, ZERO_S), n, S))


def test_parse_reflexive_equation_round_trips():
    f = parse("x =s x")
    assert f == Eq(x, x, S)
    assert parse(print_formula(f)) == f


def test_parse_strict_rank_operator():
    assert parse("(n in_w X)^[2]") == RankOp(Mem(n, "X", W), sr(2))


def test_parse_flavored_relations_and_constants():
    f = parse("0_w(1) <w[2] 1_w[0] + y")
    assert f == Lt(Const(0, wr(1)), Add(Const(1, sr(0)), y), sr(2))


def test_print_examples():
    assert print_formula(Eq(x, y, wr(3))) == "x =w(3) y"
    assert print_formula(Not(Mem(n, "X", S))) == "!(n in_s X)"
    a, b, c = (Eq(v, v, S) for v in (x, y, n))
    assert print_formula(And(a, And(b, c))) == "x =s x & (y =s y & n =s n)"


def test_precedence():
    a, b, c = (parse(t) for t in ("x =s x", "y =s y", "z =s z"))
    assert parse("x =s x | y =s y & z =s z") == Or(a, And(b, c))
    assert parse("x =s x -> y =s y -> z =s z") == Implies(a, Implies(b, c))
    assert parse("x =s x <-> y =s y <-> z =s z") == Iff(Iff(a, b), c)
    assert parse("!x =s x & y =s y") == And(Not(a), b)
    assert parse_term("x + y * z") == Add(x, Mul(y, NumVar("z")))
    assert parse_term("(x + y) * z") == Mul(Add(x, y), NumVar("z"))


def test_quantifier_body_extends_right():
    f = parse("exists X. forall x. x in_s X -> x =s x")
    assert isinstance(f, ExistsSet) and isinstance(f.body, ForallNum)
    assert isinstance(f.body.body, Implies)


def test_parenthesized_terms_and_formulas():
    assert parse("(x + y) =s x") == Eq(Add(x, y), x, S)
    assert parse("((x =s y))") == Eq(x, y, S)


def test_round_trip_enumerated(pool_10k):
    for f in pool_10k:
        assert parse(print_formula(f)) == f


def test_unicode_names_round_trip():
    f = parse("forall über. über =w über")
    assert f.var == "über"
    assert parse(print_formula(f)) == f


@pytest.mark.parametrize("text, offset, column", [
    ("x =q y", 2, 3),
    ("x =s", 4, 5),
    ("x =s y )", 7, 8),
    ("x =s y & # ", 9, 10),
])
def test_parse_error_offsets(text, offset, column):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.byte_offset == offset
    assert info.value.column == column
    assert isinstance(info.value, SyntaxError)


def test_parse_error_reports_bytes_and_lines():
    with pytest.raises(ParseError) as info:
        parse("ä =s ä &\n  ?")
    err = info.value
    assert err.line == 2 and err.column == 3
    assert err.byte_offset == len("ä =s ä &\n  ".encode("utf-8"))


@pytest.mark.parametrize("text", ["x =w(-1) y", "(x =s y)^[-2]", "x in_w[a] X", "(x =s y)^(q)"])
def test_rank_errors(text):
    with pytest.raises(RankError):
        parse(text)


def test_sort_errors_in_text():
    with pytest.raises(ParseError):
        parse("x in_s y")
    with pytest.raises(ParseError):
        parse("X =s x")


def test_rank_operator_rejects_unranked_flavor():
    with pytest.raises(RankError):
        RankOp(Eq(x, x, S), W)


# Free variables and substitution


def test_free_vars_examples():
    assert free_vars(parse("forall n. n in_s X")) == (frozenset(), frozenset({"X"}))
    assert free_vars(parse("exists X. n in_w X & n =s n")) == (frozenset({"n"}), frozenset())
    closed = universal_closure(parse("m =s m"))
    assert free_vars(closed) == (frozenset(), frozenset())


def test_universal_closure_puts_set_quantifiers_outside():
    f = universal_closure(parse("y in_s X -> x =s y"))
    assert f == ForallSet("X", ForallNum("x", ForallNum("y", parse("y in_s X -> x =s y"))))


def test_substitute_constant():
    assert substitute(parse("n =s n"), "n", ONE_S) == parse("1_s =s 1_s")


def test_substitute_respects_shadowing():
    f = parse("forall n. n =s n")
    assert substitute(f, "n", ONE_S) == f


def test_substitute_set_variable_is_a_sort_error():
    with pytest.raises(SortError):
        substitute(parse("n in_s X"), "X", ONE_S)
    with pytest.raises(SortError):
        substitute(parse("n =s n"), "n", parse("n =s n"))


def test_substitute_avoids_capture():
    f = parse("forall m. m + n =s k")
    g = substitute(f, "n", m)
    assert isinstance(g, ForallNum) and g.var != "m"
    assert "m" in free_vars(g)[0]
    # Both sides agree on every assignment over a three-element model.
    carrier = [(i, S) for i in range(3)]
    for a, c in product(carrier, repeat=2):
        lhs = classical_eval(g, carrier, [], {"m": a, "k": c}, {})
        rhs = classical_eval(f, carrier, [], {"n": a, "k": c}, {})
        assert lhs == rhs


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_substituted_variable_is_no_longer_free(data):
    f = data.draw(formulas())
    var = data.draw(st.sampled_from(["x", "y", "z"]))
    t = data.draw(terms_without(var))
    assert var not in free_vars(substitute(f, var, t))[0]


def test_alpha_equal():
    assert alpha_equal(parse("forall x. x =s x"), parse("forall y. y =s y"))
    assert not alpha_equal(parse("forall x. x =s y"), parse("forall y. y =s y"))
    assert alpha_equal(parse("exists X. x in_w X"), parse("exists Y. x in_w Y"))


# Flavors


def test_flavor_enumeration_interleave():
    assert flavors_up_to(1) == [S, W, wr(0), sr(0), wr(1), sr(1)]
    keys = [enumeration_key(f) for f in flavors_up_to(3)]
    assert keys == sorted(keys)


def test_flavor_join_takes_the_more_inconsistent():
    assert join(S, W) == W
    assert join(wr(2), sr(0)) == sr(0)
    assert join(wr(1), wr(2)) == wr(2)


# Pairing and Gödel numbers


def test_pair_examples():
    assert pair(0, 0) == 0
    assert pair(1, 2) == 10


def test_pair_injective_and_invertible():
    seen = {}
    for a, b in product(range(101), repeat=2):
        code = pair(a, b)
        assert code not in seen
        seen[code] = (a, b)
        assert unpair(code) == (a, b)


def test_godel_fixed_codes():
    assert godel_number(parse("x in_s X")) == 0
    assert godel_number(parse("0_s =s 0_s")) == 16
    assert godel_number(parse("x =w 1_w")) == 39


def test_godel_is_deterministic_across_prints():
    f = parse("forall x. x + 0_w =w x")
    assert godel_number(f) == godel_number(parse(print_formula(f)))
    assert godel_number(f) == godel_number(parse("forall   x.(x+0_w)=w x"))


def test_godel_injective_on_pool(pool_10k):
    codes = {}
    for f in pool_10k:
        code = godel_number(f)
        assert code <= 10_000
        assert code not in codes
        codes[code] = f
    assert len(codes) == len(pool_10k)


def test_codes_decode(pool_10k):
    for f in pool_10k[:2000]:
        assert formula_of_code(godel_number(f)) == f
        assert deserialize(serialize(f)) == f


def test_smallest_equation_precedes_larger_formulas(pool_10k):
    base = godel_number(parse("0_s =s 0_s"))
    assert node_count(parse("0_s =s 0_s")) == 3
    for f in pool_10k:
        if node_count(f) > 3:
            assert godel_number(f) > base


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_larger_generated_formulas_have_larger_codes(data):
    f = data.draw(formulas())
    if node_count(f) > 3:
        assert godel_number(f) > godel_number(parse("0_s =s 0_s"))


# Enumeration


def test_enumerate_limit_zero():
    assert len(enumerate_formulas(0)) <= 1
    assert enumerate_formulas(-1) == []


def test_enumerate_is_sorted_and_bounded(pool_10k):
    codes = [godel_number(f) for f in pool_10k]
    assert codes == sorted(codes)
    assert all(c <= 10_000 for c in codes)
    assert all(in_pool(f) for f in pool_10k)


def test_enumerate_matches_decoding_every_code():
    expected = []
    for c in range(600):
        try:
            f = formula_of_code(c)
        except (ValueError, TypeError):
            continue
        if in_pool(f):
            expected.append(f)
    assert enumerate_formulas(599) == expected


def test_enumerate_monotone_in_limit():
    sizes = [len(enumerate_formulas(limit)) for limit in range(201)]
    assert all(a <= b for a, b in zip(sizes, sizes[1:]))
    assert sizes[-1] > 0


def test_enumerate_cap():
    with pytest.raises(ResourceError):
        enumerate_formulas(500, cap=100)


# Random formula generation


NUM_NAMES = st.sampled_from(["x", "y", "z", "n", "foo"])
SET_NAMES = st.sampled_from(["X", "Y", "Z"])
FLAVORS = st.one_of(
    st.just(S), st.just(W),
    st.integers(0, 3).map(wr), st.integers(0, 3).map(sr),
)
RANKED = st.one_of(st.integers(0, 3).map(wr), st.integers(0, 3).map(sr))


def term_strategy(names):
    leaves = st.one_of(names.map(NumVar), st.builds(Const, st.sampled_from([0, 1]), FLAVORS))
    return st.recursive(
        leaves,
        lambda sub: st.one_of(st.builds(Add, sub, sub), st.builds(Mul, sub, sub)),
        max_leaves=4,
    )


def terms_without(var):
    return term_strategy(st.sampled_from([v for v in ("x", "y", "z", "n") if v != var]))


def formulas():
    t = term_strategy(NUM_NAMES)
    atoms = st.one_of(
        st.builds(Eq, t, t, FLAVORS),
        st.builds(Lt, t, t, FLAVORS),
        st.builds(Mem, t, SET_NAMES, FLAVORS),
    )

    def extend(sub):
        return st.one_of(
            st.builds(Not, sub),
            st.builds(And, sub, sub), st.builds(Or, sub, sub),
            st.builds(Implies, sub, sub), st.builds(Iff, sub, sub),
            st.builds(ForallNum, NUM_NAMES, sub), st.builds(ExistsNum, NUM_NAMES, sub),
            st.builds(ForallSet, SET_NAMES, sub), st.builds(ExistsSet, SET_NAMES, sub),
            st.builds(RankOp, sub, RANKED),
        )

    return st.recursive(atoms, extend, max_leaves=6)


@given(formulas())
@settings(max_examples=300, deadline=None)
def test_generated_formulas_round_trip(f):
    assert parse(print_formula(f)) == f
    assert deserialize(serialize(f)) == f
    assert formula_of_code(godel_number(f)) == f
