"""Ideal arithmetic on top of the Groebner engine.

Intersections use one auxiliary variable and an elimination order; colons
by an element divide the generators of ``I ∩ (f)`` by ``f``; colons by an
ideal intersect the element-wise colons; saturation iterates the colon so the
stabilization index is known.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from .errors import DegenerateInputError, RingMismatchError
from .groebner import GroebnerBasis, groebner_basis, normal_form
from .polyring import GREVLEX, MonomialOrder, Polynomial, Ring, elimination


class Ideal:
    """Finitely generated ideal of a polynomial ring.

    Equality is mathematical (reduced grevlex bases coincide).  Groebner
    bases and colon results are cached on the instance; the caches are
    write-once per key, so concurrent readers at worst duplicate work.
    """

    __slots__ = ("ring", "generators", "_gb", "_colon", "__weakref__")

    def __init__(self, ring: Ring, generators: Iterable = ()):
        self.ring = ring
        gens = []
        for g in generators:
            g = ring(g) if not isinstance(g, Polynomial) else g
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._gb: Dict[MonomialOrder, GroebnerBasis] = {}
        self._colon: Dict[object, "Ideal"] = {}

    # constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, ring: Ring) -> "Ideal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, (ring.one(),))

    @classmethod
    def maximal(cls, ring: Ring) -> "Ideal":
        """The homogeneous maximal ideal generated by all variables."""
        return cls(ring, ring.gens)

    @classmethod
    def parse(cls, ring: Ring, texts: Sequence[str]) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    # Groebner data ----------------------------------------------------------
    def gb(self, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
        order = order or GREVLEX
        basis = self._gb.get(order)
        if basis is None:
            basis = groebner_basis(self.generators, order, ring=self.ring)
            basis = self._gb.setdefault(order, basis)
        return basis

    def reduced(self) -> "Ideal":
        """Same ideal, generated by its reduced grevlex basis."""
        gb = self.gb()
        out = Ideal(self.ring, gb.generators)
        out._gb[GREVLEX] = gb
        return out

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        for g in self.generators:
            if g.is_constant():
                return True
        if not self.generators:
            return False
        return self.gb().is_unit()

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def leading_monomials(self):
        return self.gb().leading_monomials()

    # membership and comparison ---------------------------------------------
    def __contains__(self, f) -> bool:
        f = self.ring(f)
        if f.is_zero():
            return True
        if not self.generators:
            return False
        return normal_form(f, self.gb()).is_zero()

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(self.ring(f), self.gb())

    def contains(self, other: "Ideal") -> bool:
        """``other ⊆ self``."""
        self._same_ring(other)
        if self.is_unit():
            return True
        return all(g in self for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        self._same_ring(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() == other.is_zero()
        return self.gb().signature() == other.gb().signature()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.equals(other)

    def __hash__(self):
        return hash((self.ring, self.gb().signature() if self.generators else ()))

    def __le__(self, other: "Ideal") -> bool:
        return other.contains(self)

    def __ge__(self, other: "Ideal") -> bool:
        return self.contains(other)

    def _same_ring(self, other: "Ideal"):
        if not isinstance(other, Ideal):
            raise TypeError("expected an Ideal")
        if other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")

    # arithmetic -------------------------------------------------------------
    def __add__(self, other: "Ideal") -> "Ideal":
        self._same_ring(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._same_ring(other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def __pow__(self, k: int) -> "Ideal":
        if k < 0:
            raise ValueError("negative ideal power")
        if k == 0:
            return Ideal.unit(self.ring)
        gens = self.generators
        out = []
        seen = set()
        for combo in combinations_with_replacement(range(len(gens)), k):
            f = self.ring.one()
            for i in combo:
                f = f * gens[i]
            if f not in seen:
                seen.add(f)
                out.append(f)
        return Ideal(self.ring, out)

    def intersect(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def colon(self, by) -> "Ideal":
        return colon(self, by)

    def saturate(self, by: "Ideal") -> Tuple["Ideal", int]:
        return saturate(self, by)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal{self}"


# ---------------------------------------------------------------------------


def combine(op: str, I: Ideal, J: Union[Ideal, int]) -> Ideal:
    """``sum``, ``product`` or ``power`` (``J`` is then the exponent)."""
    if op == "sum":
        return I + J
    if op == "product":
        return I * J
    if op == "power":
        return I ** J
    raise ValueError(f"unknown combination {op!r}")


def _aux_ring(ring: Ring) -> Ring:
    name = "t"
    while name in ring.variables:
        name = "_" + name
    return Ring((name,) + ring.variables, ring.characteristic, elimination(1))


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t·I + (1 - t)·J``."""
    I._same_ring(J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)
    if any(g.is_constant() for g in I.generators):
        return J
    if any(g.is_constant() for g in J.generators):
        return I
    big = _aux_ring(ring)
    lifted = []
    for f in I.generators:
        lifted.append(Polynomial(big, {(1,) + m: c for m, c in f.items()}, _clean=True))
    p = ring.characteristic
    for g in J.generators:
        t = {(0,) + m: c for m, c in g.items()}
        t.update({(1,) + m: p - c for m, c in g.items()})
        lifted.append(Polynomial(big, t, _clean=True))
    gb = groebner_basis(lifted, big.order, ring=big)
    out = []
    for h in gb.generators:
        if all(m[0] == 0 for m in h._terms):
            out.append(Polynomial(ring, {m[1:]: c for m, c in h.items()}, _clean=True))
    return Ideal(ring, out)


def _colon_element(I: Ideal, f: Polynomial) -> Ideal:
    ring = I.ring
    if f.is_zero():
        raise DegenerateInputError("colon by the zero element")
    if f.is_constant():
        return I
    if I.is_zero():
        return I
    if f in I:
        return Ideal.unit(ring)
    meet = intersect(I, Ideal(ring, (f,)))
    return Ideal(ring, [h.exact_div(f) for h in meet.generators])


def colon(I: Ideal, by) -> Ideal:
    """``I : by`` for a polynomial or an ideal ``by``."""
    if isinstance(by, Ideal):
        I._same_ring(by)
        if by.is_zero():
            raise DegenerateInputError("colon by the zero ideal")
        key = ("ideal", frozenset(by.generators))
    else:
        by = I.ring(by)
        if by.ring != I.ring:
            raise RingMismatchError("divisor from a different ring")
        key = by
    cached = I._colon.get(key)
    if cached is not None:
        return cached
    if isinstance(by, Ideal):
        result = None
        for f in by.generators:
            part = _colon_element(I, f)
            if part.is_unit():
                continue
            result = part if result is None else intersect(result, part)
        if result is None:
            result = Ideal.unit(I.ring)
    else:
        result = _colon_element(I, by)
    return I._colon.setdefault(key, result)


def saturate(I: Ideal, by: Ideal) -> Tuple[Ideal, int]:
    """Stable value of ``I : by^k`` and the least ``k >= 1`` with ``I:by^k = I:by^(k+1)``."""
    if by.is_zero():
        raise DegenerateInputError("saturation by the zero ideal")
    current = colon(I, by)
    k = 1
    while True:
        nxt = colon(current, by)
        if current.contains(nxt):
            return current, k
        current = nxt
        k += 1


def compare(rel: str, I: Ideal, J: Ideal) -> bool:
    """``equal``: same ideal; ``contains``: ``J ⊆ I``."""
    if rel == "equal":
        return I.equals(J)
    if rel == "contains":
        return I.contains(J)
    raise ValueError(f"unknown relation {rel!r}")
