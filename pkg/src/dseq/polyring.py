"""Sparse multivariate polynomials over a prime field.

Monomials are exponent tuples.  Every monomial order used here is a weight
matrix order with non-negative integer rows, so comparing two monomials means
comparing ``W @ e`` lexicographically.  The same matrices drive the packed
keys of the reduction kernels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as _cartesian
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import DegenerateInputError, ParseError, RingMismatchError

Monomial = Tuple[int, ...]

DEFAULT_CHARACTERISTIC = 32003


# ---------------------------------------------------------------------------
# Orders


@lru_cache(maxsize=None)
def _grevlex_rows(n: int) -> Tuple[Tuple[int, ...], ...]:
    # row 0 is total degree; row j drops the last j variables
    return tuple(tuple(1 if i < n - j else 0 for i in range(n)) for j in range(n))


@lru_cache(maxsize=None)
def _weight_rows(kind: str, block: int, n: int) -> Tuple[Tuple[int, ...], ...]:
    if kind == "grevlex":
        return _grevlex_rows(n)
    if kind == "lex":
        return tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))
    # elimination: grevlex on the first block, ties broken by grevlex on the rest
    k = block
    rows = [row + (0,) * (n - k) for row in _grevlex_rows(k)]
    rows += [(0,) * k + row for row in _grevlex_rows(n - k)]
    return tuple(rows)


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex``, ``lex``, or ``elim`` (eliminates the first ``block`` variables)."""

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("an elimination order needs block >= 1")
        if self.kind != "elim" and self.block:
            raise ValueError("block is only meaningful for elimination orders")

    def weights(self, nvars: int) -> Tuple[Tuple[int, ...], ...]:
        if self.kind == "elim" and self.block > nvars:
            raise ValueError("elimination block larger than the number of variables")
        return _weight_rows(self.kind, self.block, nvars)

    def key(self, m: Monomial) -> Tuple[int, ...]:
        """Sort key: larger key means larger monomial."""
        return tuple(sum(w * e for w, e in zip(row, m)) for row in self.weights(len(m)))

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        text = text.strip().lower()
        m = re.fullmatch(r"elim(?:ination)?(?:-block)?\((\d+)\)", text)
        if m:
            return cls("elim", int(m.group(1)))
        return cls(text)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


def compare_monomials(order: MonomialOrder, m1: Sequence[int], m2: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``m1`` is smaller than, equal to, or larger than ``m2``."""
    if len(m1) != len(m2):
        raise ValueError("exponent vectors of different length")
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


# ---------------------------------------------------------------------------
# Monomial helpers


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Rings


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Ring:
    """``F_p[variables]`` with a default monomial order."""

    variables: Tuple[str, ...]
    characteristic: int = DEFAULT_CHARACTERISTIC
    order: MonomialOrder = GREVLEX
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        p = self.characteristic
        if not (2 < p < 2**31) or not _is_prime(p):
            raise ValueError(f"characteristic must be a prime with 2 < p < 2^31, got {p}")
        if not variables:
            raise ValueError("a ring needs at least one variable")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v or ""):
                raise ValueError(f"invalid variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be unique")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(variables)})
        self.order.weights(len(variables))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self._index[name]

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.variables, self.characteristic, order)

    # constructors -----------------------------------------------------------
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        return Polynomial(self, {exps: coeff})

    def var(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self._index[name]] = 1
        return Polynomial(self, {tuple(e): 1})

    @property
    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def __call__(self, text) -> "Polynomial":
        if isinstance(text, Polynomial):
            return text
        if isinstance(text, int):
            return self.const(text)
        return parse_poly(text, self)

    def __str__(self):
        return f"F_{self.characteristic}[{', '.join(self.variables)}] ({self.order})"


# ---------------------------------------------------------------------------
# Polynomials


class Polynomial:
    """Immutable polynomial: a map from exponent tuples to nonzero residues mod p."""

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, int], _clean: bool = False):
        self.ring = ring
        if _clean:
            self._terms = dict(terms)
        else:
            p = ring.characteristic
            t = {}
            for m, c in terms.items():
                c %= p
                if c:
                    t[tuple(m)] = c
            self._terms = t
        self._sorted = None
        self._hash = None

    # basic structure --------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self):
        """Terms ordered by decreasing monomial in the ring's order."""
        if self._sorted is None:
            key = self.ring.order.key
            self._sorted = sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, m: Sequence[int]) -> int:
        return self._terms.get(tuple(m), 0)

    @property
    def lm(self) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.sorted_terms()[0][0]

    @property
    def lc(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.sorted_terms()[0][1]

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.ring.nvars, 0)

    # arithmetic -------------------------------------------------------------
    def _check(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine polynomials of {self.ring} and {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        t = dict(self._terms)
        for m, c in other._terms.items():
            s = (t.get(m, 0) + c) % p
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Polynomial(self.ring, t, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.characteristic
        return Polynomial(self.ring, {m: p - c for m, c in self._terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        t: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = (t.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, {m: c for m, c in t.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.ring, {m: v * c for m, v in self._terms.items()})

    def mul_monomial(self, m: Monomial, c: int = 1) -> "Polynomial":
        p = self.ring.characteristic
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, m)): v * c % p for e, v in self._terms.items()},
            _clean=True,
        )

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(pow(self.lc, -1, self.ring.characteristic))

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises ``ValueError`` when it is not exact."""
        divisor = self._check(divisor)
        if divisor.is_zero():
            raise DegenerateInputError("division by the zero polynomial")
        p = self.ring.characteristic
        lm_d, lc_d = divisor.lm, divisor.lc
        inv = pow(lc_d, -1, p)
        quotient: Dict[Monomial, int] = {}
        rest = self
        while rest:
            m, c = rest.lm, rest.lc
            if not mono_divides(lm_d, m):
                raise ValueError("division is not exact")
            shift = mono_div(m, lm_d)
            q = c * inv % p
            quotient[shift] = q
            rest = rest - divisor.mul_monomial(shift, q)
        return Polynomial(self.ring, quotient, _clean=True)

    def with_ring(self, ring: Ring) -> "Polynomial":
        """Re-tag with a ring over the same variables and field (e.g. another order)."""
        if ring.variables != self.ring.variables or ring.characteristic != self.ring.characteristic:
            raise RingMismatchError("re-tagging needs identical variables and characteristic")
        return Polynomial(ring, self._terms, _clean=True)

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # printing ---------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    """Render in the input grammar; coefficients use the symmetric residue."""
    if f.is_zero():
        return "0"
    p = f.ring.characteristic
    out = []
    for i, (m, c) in enumerate(f.sorted_terms()):
        c = c - p if c > p // 2 else c
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = _format_monomial(m, f.ring.variables)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# Parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:[./]\d*)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", len(text) - len(text[pos:].lstrip()))
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "num" and not value.isdigit():
            raise ParseError(f"coefficient {value!r} is not an integer", start)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.take()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}, found {value or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        f = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos)
        return f

    def expr(self) -> Polynomial:
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                g = self.term()
                f = f + g if value == "+" else f - g
            else:
                return f

    def term(self) -> Polynomial:
        f = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.take()
                f = f * self.factor()
            else:
                return f

    def factor(self) -> Polynomial:
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer", pos)
            return base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.take()
        if kind == "num":
            return self.ring.const(int(value))
        if kind == "name":
            if value not in self.ring._index:
                raise ParseError(f"unknown variable {value!r}", pos)
            return self.ring.var(value)
        if kind == "op" and value == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {value!r}", pos)


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` (integers, variables, ``+ - * ^`` and parentheses)."""
    if not isinstance(text, str):
        raise TypeError("polynomial text must be a string")
    if not text.strip():
        raise ParseError("empty polynomial", 0)
    return _Parser(text, ring).parse()


def poly_arith(op: str, lhs: Polynomial, rhs) -> Polynomial:
    """Dispatch ``add``, ``mul``, ``pow`` or ``scale``."""
    if op == "add":
        return lhs + rhs
    if op == "mul":
        return lhs * rhs
    if op == "pow":
        return lhs ** rhs
    if op == "scale":
        return lhs.scale(rhs)
    raise ValueError(f"unknown operation {op!r}")


def monomials_of_degree(nvars: int, d: int) -> Iterable[Monomial]:
    """All exponent vectors of total degree ``d``."""
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


def box(bounds: Sequence[int]) -> Iterable[Monomial]:
    """Exponent vectors with ``0 <= e_i <= bounds[i]``."""
    return _cartesian(*(range(b + 1) for b in bounds))
