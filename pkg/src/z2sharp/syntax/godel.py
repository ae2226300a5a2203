"""Gödel numbering and ordered enumeration of formulas.

A formula is serialized in prefix (Polish) notation over a fixed 26-symbol
alphabet. Naturals inside the string (variable indices and ranks) use a
self-delimiting unary-prefixed binary form. The code of a formula is its
position in the shortlex order of all well-formed symbol strings: every
shorter string comes first, and strings of equal length are ordered
lexicographically by alphabet position. Codes are therefore injective,
shorter formulas always receive smaller codes, and the codes are dense
over symbol strings: every natural is the code of exactly one well-formed
string. A few strings name no variable (an index whose bytes are not a
valid identifier), so not every natural decodes to a formula.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import ResourceError
from .ast import (
    Add, And, Const, Eq, ExistsNum, ExistsSet, ForallNum, ForallSet, Iff,
    Implies, Lt, Mem, Mul, Not, NumVar, Or, RankOp,
)
from .flavor import S, STRICT, W, WRANKED, Flavor, sr, wr

ALPHABET = (
    "EQ", "LT", "MEM", "NOT", "AND", "OR", "IMP", "IFF",
    "AN", "EN", "AS", "ES", "RK", "V", "C0", "C1", "ADD", "MUL",
    "FS", "FW", "FR", "FQ", "E", "U", "B0", "B1",
)
SYM = {name: i for i, name in enumerate(ALPHABET)}
(EQ, LT, MEM, NOT, AND, OR, IMP, IFF, AN, EN, AS, ES, RK, V, C0, C1, ADD, MUL,
 FS, FW, FR, FQ, E, U, B0, B1) = range(len(ALPHABET))

NUM_POOL = ("x", "y", "z")
SET_POOL = ("X", "Y")
MAX_POOL_RANK = 2
DEFAULT_CAP = 200_000

# Nonterminals of the string grammar. A natural is tracked by two states:
# ("NU", j) after reading j unary digits, ("NB", r) with r bits still due.
F, T, FL, RF = "F", "T", "FL", "RF"
NAT = ("NU", 0)
_MIN_LEN = {F: 5, T: 2, FL: 1, RF: 2}


# Naturals and names


def encode_nat(i: int) -> list[int]:
    bits = bin(i + 1)[3:]
    return [U] * len(bits) + [E] + [B1 if b == "1" else B0 for b in bits]


def _bijective(data: bytes) -> int:
    value = 0
    for byte in data:
        value = value * 256 + byte + 1
    return value


def _unbijective(value: int) -> bytes:
    out = []
    while value > 0:
        value -= 1
        out.append(value % 256)
        value //= 256
    return bytes(reversed(out))


def num_index(name: str) -> int:
    if name in NUM_POOL:
        return NUM_POOL.index(name)
    return len(NUM_POOL) + _bijective(name.encode("utf-8"))


def set_index(name: str) -> int:
    if name in SET_POOL:
        return SET_POOL.index(name)
    return len(SET_POOL) + _bijective(name.encode("utf-8"))


def num_name(i: int) -> str:
    if i < len(NUM_POOL):
        return NUM_POOL[i]
    return _unbijective(i - len(NUM_POOL)).decode("utf-8")


def set_name(i: int) -> str:
    if i < len(SET_POOL):
        return SET_POOL[i]
    return _unbijective(i - len(SET_POOL)).decode("utf-8")


# Serialization


def _flavor_syms(f: Flavor) -> list[int]:
    if f.kind == WRANKED:
        return [FR] + encode_nat(f.rank)
    if f.kind == STRICT:
        return [FQ] + encode_nat(f.rank)
    return [FS] if f == S else [FW]


def _term_syms(t, out: list[int]) -> None:
    if isinstance(t, NumVar):
        out.append(V)
        out += encode_nat(num_index(t.name))
    elif isinstance(t, Const):
        out.append(C0 if t.value == 0 else C1)
        out += _flavor_syms(t.flavor)
    else:
        out.append(ADD if isinstance(t, Add) else MUL)
        _term_syms(t.left, out)
        _term_syms(t.right, out)


_BINARY_SYM = {And: AND, Or: OR, Implies: IMP, Iff: IFF}
_QUANT_SYM = {ForallNum: AN, ExistsNum: EN, ForallSet: AS, ExistsSet: ES}


def _formula_syms(f, out: list[int]) -> None:
    if isinstance(f, (Eq, Lt)):
        out.append(EQ if isinstance(f, Eq) else LT)
        out += _flavor_syms(f.flavor)
        _term_syms(f.left, out)
        _term_syms(f.right, out)
    elif isinstance(f, Mem):
        out.append(MEM)
        out += _flavor_syms(f.flavor)
        _term_syms(f.term, out)
        out += encode_nat(set_index(f.set_var))
    elif isinstance(f, Not):
        out.append(NOT)
        _formula_syms(f.body, out)
    elif type(f) in _BINARY_SYM:
        out.append(_BINARY_SYM[type(f)])
        _formula_syms(f.left, out)
        _formula_syms(f.right, out)
    elif type(f) in _QUANT_SYM:
        out.append(_QUANT_SYM[type(f)])
        if isinstance(f, (ForallNum, ExistsNum)):
            out += encode_nat(num_index(f.var))
        else:
            out += encode_nat(set_index(f.var))
        _formula_syms(f.body, out)
    elif isinstance(f, RankOp):
        out.append(RK)
        out += _flavor_syms(f.flavor)
        _formula_syms(f.body, out)
    else:
        raise TypeError(f"not a formula: {f!r}")


def serialize(f) -> tuple[int, ...]:
    """The symbol string of a formula, as alphabet indices."""
    out: list[int] = []
    _formula_syms(f, out)
    return tuple(out)


class _Reader:
    def __init__(self, syms):
        self.syms = syms
        self.i = 0

    def next(self) -> int:
        if self.i >= len(self.syms):
            raise ValueError("truncated symbol string")
        s = self.syms[self.i]
        self.i += 1
        return s

    def nat(self) -> int:
        width = 0
        s = self.next()
        while s == U:
            width += 1
            s = self.next()
        if s != E:
            raise ValueError("malformed natural")
        value = 1
        for _ in range(width):
            b = self.next()
            if b not in (B0, B1):
                raise ValueError("malformed natural")
            value = 2 * value + (b == B1)
        return value - 1

    def flavor(self) -> Flavor:
        s = self.next()
        if s == FS:
            return S
        if s == FW:
            return W
        if s == FR:
            return wr(self.nat())
        if s == FQ:
            return sr(self.nat())
        raise ValueError("malformed flavor")

    def term(self):
        s = self.next()
        if s == V:
            return NumVar(num_name(self.nat()))
        if s in (C0, C1):
            return Const(0 if s == C0 else 1, self.flavor())
        if s in (ADD, MUL):
            left = self.term()
            return (Add if s == ADD else Mul)(left, self.term())
        raise ValueError("malformed term")

    def formula(self):
        s = self.next()
        if s in (EQ, LT):
            flavor = self.flavor()
            left = self.term()
            return (Eq if s == EQ else Lt)(left, self.term(), flavor)
        if s == MEM:
            flavor = self.flavor()
            t = self.term()
            return Mem(t, set_name(self.nat()), flavor)
        if s == NOT:
            return Not(self.formula())
        if s in (AND, OR, IMP, IFF):
            cls = {AND: And, OR: Or, IMP: Implies, IFF: Iff}[s]
            left = self.formula()
            return cls(left, self.formula())
        if s in (AN, EN):
            name = num_name(self.nat())
            return (ForallNum if s == AN else ExistsNum)(name, self.formula())
        if s in (AS, ES):
            name = set_name(self.nat())
            return (ForallSet if s == AS else ExistsSet)(name, self.formula())
        if s == RK:
            flavor = self.flavor()
            if not flavor.is_ranked:
                raise ValueError("rank operator without a rank")
            return RankOp(self.formula(), flavor)
        raise ValueError("malformed formula")


def deserialize(syms) -> object:
    r = _Reader(tuple(syms))
    f = r.formula()
    if r.i != len(r.syms):
        raise ValueError("trailing symbols")
    return f


# Counting well-formed strings


def _step(stack: tuple, sym: int):
    """Consume one symbol from the leftmost pending nonterminal."""
    if not stack:
        return None
    top, rest = stack[0], stack[1:]
    if top == F:
        if sym in (EQ, LT):
            return (FL, T, T) + rest
        if sym == MEM:
            return (FL, T, NAT) + rest
        if sym == NOT:
            return (F,) + rest
        if AND <= sym <= IFF:
            return (F, F) + rest
        if AN <= sym <= ES:
            return (NAT, F) + rest
        if sym == RK:
            return (RF, F) + rest
        return None
    if top == T:
        if sym == V:
            return (NAT,) + rest
        if sym in (C0, C1):
            return (FL,) + rest
        if sym in (ADD, MUL):
            return (T, T) + rest
        return None
    if top in (FL, RF):
        if sym in (FS, FW) and top == FL:
            return rest
        if sym in (FR, FQ):
            return (NAT,) + rest
        return None
    kind, n = top
    if kind == "NU":
        if sym == U:
            return (("NU", n + 1),) + rest
        if sym == E:
            return ((("NB", n),) + rest) if n else rest
        return None
    if sym in (B0, B1):
        return ((("NB", n - 1),) + rest) if n > 1 else rest
    return None


def _min_len(item) -> int:
    if isinstance(item, tuple):
        kind, n = item
        return n + 1 if kind == "NU" else n
    return _MIN_LEN[item]


@lru_cache(maxsize=None)
def count_item(item, length: int) -> int:
    """Number of strings of exactly ``length`` symbols derivable from ``item``."""
    if length < _min_len(item):
        return 0
    if isinstance(item, tuple):
        kind, n = item
        if kind == "NB":
            return 2 ** n if length == n else 0
        rem = length - n - 1
        if rem < 0 or rem % 2:
            return 0
        return 2 ** (n + rem // 2)
    total = 0
    for sym in range(len(ALPHABET)):
        nxt = _step((item,), sym)
        if nxt is not None:
            total += count_seq(nxt, length - 1)
    return total


@lru_cache(maxsize=None)
def count_seq(stack: tuple, length: int) -> int:
    """Number of strings of exactly ``length`` symbols derivable from the
    nonterminal sequence ``stack``."""
    if not stack:
        return 1 if length == 0 else 0
    first, rest = stack[0], stack[1:]
    rest_min = sum(_min_len(x) for x in rest)
    total = 0
    for l in range(_min_len(first), length - rest_min + 1):
        c = count_item(first, l)
        if c:
            total += c * count_seq(rest, length - l)
    return total


@lru_cache(maxsize=None)
def offset(length: int) -> int:
    """Number of well-formed formula strings shorter than ``length``."""
    return sum(count_item(F, l) for l in range(length))


def code_of_string(syms) -> int:
    syms = tuple(syms)
    n = len(syms)
    rank = 0
    stack: tuple = (F,)
    for pos, sym in enumerate(syms):
        remaining = n - pos - 1
        for smaller in range(sym):
            nxt = _step(stack, smaller)
            if nxt is not None:
                rank += count_seq(nxt, remaining)
        stack = _step(stack, sym)
        if stack is None:
            raise ValueError("not a well-formed formula string")
    if stack:
        raise ValueError("incomplete formula string")
    return offset(n) + rank


def godel_number(f) -> int:
    """The shortlex code of ``f``."""
    return code_of_string(serialize(f))


def string_of_code(code: int) -> tuple[int, ...]:
    """Inverse of ``code_of_string``."""
    if code < 0:
        raise ValueError("codes are naturals")
    length = 5
    while offset(length + 1) <= code:
        length += 1
    rank = code - offset(length)
    out: list[int] = []
    stack: tuple = (F,)
    for pos in range(length):
        remaining = length - pos - 1
        for sym in range(len(ALPHABET)):
            nxt = _step(stack, sym)
            if nxt is None:
                continue
            c = count_seq(nxt, remaining)
            if rank < c:
                out.append(sym)
                stack = nxt
                break
            rank -= c
    return tuple(out)


def formula_of_code(code: int):
    return deserialize(string_of_code(code))


def in_pool(f) -> bool:
    """True iff ``f`` uses only the enumeration pool: number variables
    x, y, z; set variables X, Y; ranks at most 2."""
    from .ast import flavors_of
    from .ops import all_names

    for name in all_names(f):
        if name not in NUM_POOL and name not in SET_POOL:
            return False
    return all(not fl.is_ranked or fl.rank <= MAX_POOL_RANK for fl in flavors_of(f))


def enumerate_formulas(limit: int, cap: int = DEFAULT_CAP) -> list:
    """Every pool formula whose code is at most ``limit``, ascending by code.

    Walks the shortlex order directly, so the work is proportional to
    ``limit``. Raises ResourceError when ``limit`` exceeds ``cap``.
    """
    if limit < 0:
        return []
    if limit >= cap:
        raise ResourceError(f"enumeration limit {limit} exceeds cap {cap}")
    out = []
    length = 5
    while offset(length) <= limit:
        budget = limit - offset(length)
        _walk((F,), length, [], 0, budget, out)
        length += 1
    return out


def _walk(stack, remaining, prefix, rank, budget, out) -> int:
    """Depth-first lexicographic walk; returns the updated rank."""
    if remaining == 0:
        if not stack and rank <= budget:
            try:
                f = deserialize(prefix)
            except (ValueError, TypeError):
                f = None
            if f is not None and in_pool(f):
                out.append(f)
        return rank + 1
    for sym in range(len(ALPHABET)):
        if rank > budget:
            return rank
        nxt = _step(stack, sym)
        if nxt is None:
            continue
        c = count_seq(nxt, remaining - 1)
        if not c:
            continue
        prefix.append(sym)
        rank = _walk(nxt, remaining - 1, prefix, rank, budget, out)
        prefix.pop()
    return rank


# Pairing


def pair(m: int, n: int) -> int:
    """The pairing function (m + n)^2 + m."""
    return (m + n) ** 2 + m


def unpair(k: int) -> tuple[int, int]:
    """Inverse of ``pair`` on its image; ValueError elsewhere."""
    from math import isqrt

    s = isqrt(k)
    m = k - s * s
    if m > s:
        raise ValueError(f"{k} is not in the image of pair")
    return m, s - m
