"""Variable handling: free variables, capture-avoiding substitution,
alpha-equivalence and universal closure."""

from __future__ import annotations

from itertools import count

from ..errors import SortError
from .ast import (
    Add, BINARIES, Const, Eq, ExistsNum, ExistsSet, ForallNum, ForallSet, Lt,
    Mem, Mul, Not, NumVar, NUM_QUANTIFIERS, QUANTIFIERS, RankOp,
    SET_QUANTIFIERS, TERMS, is_set_name,
)


def term_vars(t) -> set[str]:
    if isinstance(t, NumVar):
        return {t.name}
    if isinstance(t, Const):
        return set()
    return term_vars(t.left) | term_vars(t.right)


def free_vars(f) -> tuple[frozenset[str], frozenset[str]]:
    """Free (number variables, set variables) of a formula or term."""
    if isinstance(f, TERMS):
        return frozenset(term_vars(f)), frozenset()
    nums: set[str] = set()
    sets: set[str] = set()
    _collect(f, frozenset(), frozenset(), nums, sets)
    return frozenset(nums), frozenset(sets)


def _collect(f, bound_n, bound_s, nums, sets):
    if isinstance(f, (Eq, Lt)):
        nums |= (term_vars(f.left) | term_vars(f.right)) - bound_n
    elif isinstance(f, Mem):
        nums |= term_vars(f.term) - bound_n
        if f.set_var not in bound_s:
            sets.add(f.set_var)
    elif isinstance(f, (Not, RankOp)):
        _collect(f.body, bound_n, bound_s, nums, sets)
    elif isinstance(f, BINARIES):
        _collect(f.left, bound_n, bound_s, nums, sets)
        _collect(f.right, bound_n, bound_s, nums, sets)
    elif isinstance(f, NUM_QUANTIFIERS):
        _collect(f.body, bound_n | {f.var}, bound_s, nums, sets)
    elif isinstance(f, SET_QUANTIFIERS):
        _collect(f.body, bound_n, bound_s | {f.var}, nums, sets)
    else:
        raise TypeError(f"not a formula: {f!r}")


def all_names(f) -> set[str]:
    """Every variable name occurring in ``f``, bound or free."""
    out: set[str] = set()
    stack = [f]
    while stack:
        n = stack.pop()
        if isinstance(n, NumVar):
            out.add(n.name)
        elif isinstance(n, Const):
            pass
        elif isinstance(n, (Add, Mul, Eq, Lt)) or isinstance(n, BINARIES):
            stack += [n.left, n.right]
        elif isinstance(n, Mem):
            out.add(n.set_var)
            stack.append(n.term)
        elif isinstance(n, QUANTIFIERS):
            out.add(n.var)
            stack.append(n.body)
        else:
            stack.append(n.body)
    return out


def fresh_name(base: str, avoid: set[str]) -> str:
    stem = base.rstrip("0123456789") or base
    for i in count(1):
        candidate = f"{stem}{i}"
        if candidate not in avoid:
            return candidate
    raise AssertionError("unreachable")


def substitute_term(t, var: str, replacement):
    if isinstance(t, NumVar):
        return replacement if t.name == var else t
    if isinstance(t, Const):
        return t
    return type(t)(substitute_term(t.left, var, replacement),
                   substitute_term(t.right, var, replacement))


def substitute(f, var: str, replacement):
    """Replace free occurrences of number variable ``var`` by the term
    ``replacement``, renaming binders that would capture its variables."""
    if is_set_name(var) or not isinstance(replacement, TERMS):
        raise SortError(f"cannot substitute {replacement!r} for {var!r}")
    return _subst(f, var, replacement, term_vars(replacement))


def _subst(f, var, rep, rep_vars):
    if isinstance(f, (Eq, Lt)):
        return type(f)(substitute_term(f.left, var, rep),
                       substitute_term(f.right, var, rep), f.flavor)
    if isinstance(f, Mem):
        return Mem(substitute_term(f.term, var, rep), f.set_var, f.flavor)
    if isinstance(f, Not):
        return Not(_subst(f.body, var, rep, rep_vars))
    if isinstance(f, RankOp):
        return RankOp(_subst(f.body, var, rep, rep_vars), f.flavor)
    if isinstance(f, BINARIES):
        return type(f)(_subst(f.left, var, rep, rep_vars),
                       _subst(f.right, var, rep, rep_vars))
    if isinstance(f, SET_QUANTIFIERS):
        return type(f)(f.var, _subst(f.body, var, rep, rep_vars))
    if isinstance(f, NUM_QUANTIFIERS):
        if f.var == var:
            return f
        if var not in free_vars(f.body)[0]:
            return f
        if f.var in rep_vars:
            new = fresh_name(f.var, all_names(f.body) | rep_vars | {var})
            body = _subst(f.body, f.var, NumVar(new), {new})
            return type(f)(new, _subst(body, var, rep, rep_vars))
        return type(f)(f.var, _subst(f.body, var, rep, rep_vars))
    raise TypeError(f"not a formula: {f!r}")


def rename_set(f, old: str, new: str):
    """Rename free occurrences of set variable ``old`` to ``new``.

    ``new`` must not be bound anywhere inside ``f``.
    """
    if isinstance(f, (Eq, Lt)):
        return f
    if isinstance(f, Mem):
        return Mem(f.term, new, f.flavor) if f.set_var == old else f
    if isinstance(f, Not):
        return Not(rename_set(f.body, old, new))
    if isinstance(f, RankOp):
        return RankOp(rename_set(f.body, old, new), f.flavor)
    if isinstance(f, BINARIES):
        return type(f)(rename_set(f.left, old, new), rename_set(f.right, old, new))
    if isinstance(f, SET_QUANTIFIERS) and f.var == old:
        return f
    return type(f)(f.var, rename_set(f.body, old, new))


def alpha_equal(f, g) -> bool:
    """Syntactic equality up to renaming of bound variables."""
    return _alpha(f, g, {}, {}, 0)


def _term_alpha(s, t, env_f, env_g) -> bool:
    if isinstance(s, NumVar) and isinstance(t, NumVar):
        bs, bt = env_f.get(s.name), env_g.get(t.name)
        if bs is None and bt is None:
            return s.name == t.name
        return bs == bt
    if type(s) is not type(t):
        return False
    if isinstance(s, Const):
        return s == t
    return _term_alpha(s.left, t.left, env_f, env_g) and _term_alpha(s.right, t.right, env_f, env_g)


def _alpha(f, g, env_f, env_g, depth) -> bool:
    if type(f) is not type(g):
        return False
    if isinstance(f, (Eq, Lt)):
        return (f.flavor == g.flavor and _term_alpha(f.left, g.left, env_f, env_g)
                and _term_alpha(f.right, g.right, env_f, env_g))
    if isinstance(f, Mem):
        if f.flavor != g.flavor or not _term_alpha(f.term, g.term, env_f, env_g):
            return False
        bs, bt = env_f.get(f.set_var), env_g.get(g.set_var)
        if bs is None and bt is None:
            return f.set_var == g.set_var
        return bs == bt
    if isinstance(f, Not):
        return _alpha(f.body, g.body, env_f, env_g, depth)
    if isinstance(f, RankOp):
        return f.flavor == g.flavor and _alpha(f.body, g.body, env_f, env_g, depth)
    if isinstance(f, BINARIES):
        return (_alpha(f.left, g.left, env_f, env_g, depth)
                and _alpha(f.right, g.right, env_f, env_g, depth))
    # quantifiers: number and set names live in disjoint namespaces
    # (lowercase versus uppercase), so one map per side suffices.
    return _alpha(f.body, g.body, {**env_f, f.var: depth}, {**env_g, g.var: depth}, depth + 1)


def universal_closure(f):
    """Prefix universal quantifiers for every free variable (sorted names)."""
    nums, sets = free_vars(f)
    for name in sorted(nums, reverse=True):
        f = ForallNum(name, f)
    for name in sorted(sets, reverse=True):
        f = ForallSet(name, f)
    return f
