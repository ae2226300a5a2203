"""Finite paraconsistent structures: evaluation, classification,
definability, comprehension and entailment."""

from .comprehension import Scheme, parse_scheme, solve_comprehension
from .definability import defined_element, defining_formulas, definable_elements, least_element
from .evaluate import Assignment, Entailment, entails, eval_term, evaluate
from .structure import (
    Classification, Element, MembershipTable, Structure, canonical_carrier,
    canonical_membership, canonical_relation, canonical_structure, classify,
    load_structure, structure_from_dict, subset_family,
)

eval = evaluate  # noqa: A001 - the public name of the operation

__all__ = [
    "Scheme", "parse_scheme", "solve_comprehension", "defined_element",
    "defining_formulas", "definable_elements", "least_element", "Assignment",
    "Entailment", "entails", "eval_term", "evaluate", "Classification",
    "Element", "MembershipTable", "Structure", "canonical_carrier",
    "canonical_membership", "canonical_relation", "canonical_structure",
    "classify", "load_structure", "structure_from_dict", "subset_family",
]
