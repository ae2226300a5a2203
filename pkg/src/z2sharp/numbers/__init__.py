"""The flavored number tower: naturals, integers, rationals, truncated reals,
primitive recursion, metric and coherence checks."""

from .integers import ParaInt, int_add, int_mul, int_neg, make_int
from .metric import (
    CoherenceReport, ContinuityCode, MetricReport, Quad, coherence_check,
    metric_axioms_check, quad,
)
from .naturals import ParaNat, nat_add, nat_compare, nat_mul, one, zero
from .rationals import (
    ParaRat, abs_value, as_rat, eval_rat_expr, parse_rat, rat, rat_add,
    rat_canonicalize, rat_compare, rat_div, rat_inv, rat_mul, rat_neg, rat_sub,
)
from .reals import ParaReal, cauchy_check, read_digit_file, real_compare
from .recursion import nat_pow, prim_rec

__all__ = [
    "ParaInt", "int_add", "int_mul", "int_neg", "make_int",
    "CoherenceReport", "ContinuityCode", "MetricReport", "Quad",
    "coherence_check", "metric_axioms_check", "quad",
    "ParaNat", "nat_add", "nat_compare", "nat_mul", "one", "zero",
    "ParaRat", "abs_value", "as_rat", "eval_rat_expr", "parse_rat", "rat",
    "rat_add", "rat_canonicalize", "rat_compare", "rat_div", "rat_inv",
    "rat_mul", "rat_neg", "rat_sub",
    "ParaReal", "cauchy_check", "read_digit_file", "real_compare",
    "nat_pow", "prim_rec",
]
