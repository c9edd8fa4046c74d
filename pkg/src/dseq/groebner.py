"""Buchberger's algorithm over F_p.

Pair bookkeeping (Gebauer-Moeller update, which applies both the product and
the chain criterion) lives here; S-polynomial reduction and normal forms are
delegated to a ``Reducer`` from :mod:`dseq.kernel`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import RingMismatchError
from .kernel import make_reducer
from .polyring import (
    Monomial,
    MonomialOrder,
    Polynomial,
    Ring,
    mono_divides,
    mono_lcm,
)


def _disjoint(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(eq=False)
class GroebnerBasis:
    """Reduced, monic Groebner basis, sorted by decreasing leading monomial."""

    ring: Ring
    order: MonomialOrder
    generators: Tuple[Polynomial, ...]
    source: Tuple[Polynomial, ...] = ()
    _reducer: object = field(default=None, repr=False)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def leading_monomials(self) -> List[Monomial]:
        key = self.order.key
        return [max(g._terms, key=key) for g in self.generators]

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def signature(self):
        """Hashable canonical form; equal iff the ideals are equal (same order)."""
        return tuple(tuple(sorted(g._terms.items())) for g in self.generators)

    def _get_reducer(self, compiled=True):
        red = self._reducer
        if red is None or (not compiled and getattr(red, "compiled", False)):
            red = make_reducer(
                self.ring.nvars,
                self.order.weights(self.ring.nvars),
                self.ring.characteristic,
                prefer_compiled=compiled,
            )
            for g in self.generators:
                red.add(g._terms.items())
            if compiled:
                self._reducer = red
        return red


def _check_ring(polys: Sequence[Polynomial], ring: Optional[Ring]) -> Ring:
    if ring is None:
        if not polys:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = polys[0].ring
    for f in polys:
        if f.ring != ring:
            raise RingMismatchError("generators live in different rings")
    return ring


def groebner_basis(
    gens: Iterable[Polynomial],
    order: Optional[MonomialOrder] = None,
    ring: Optional[Ring] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = tuple(gens)
    ring = _check_ring(gens, ring)
    order = order or ring.order
    polys = [g for g in gens if not g.is_zero()]
    if not polys:
        return GroebnerBasis(ring, order, (), gens)
    try:
        basis = _buchberger(ring, order, polys, compiled=True)
    except OverflowError:
        basis = _buchberger(ring, order, polys, compiled=False)
    return GroebnerBasis(ring, order, tuple(basis), gens)


def _buchberger(ring: Ring, order: MonomialOrder, polys, compiled: bool):
    n = ring.nvars
    red = make_reducer(n, order.weights(n), ring.characteristic, prefer_compiled=compiled)
    okey = order.key
    LM = {}
    G: List[int] = []
    pairs = []  # (degree of lcm, order key of lcm, i, j, lcm)

    def update(h: int):
        nonlocal G, pairs
        lh = LM[h]
        C = [(g, mono_lcm(lh, LM[g])) for g in G]
        D = []
        while C:
            g1, L1 = C.pop(0)
            if _disjoint(lh, LM[g1]) or (
                not any(mono_divides(L2, L1) for _, L2 in C)
                and not any(mono_divides(L2, L1) for _, L2 in D)
            ):
                D.append((g1, L1))
        new_pairs = [(g, L) for g, L in D if not _disjoint(lh, LM[g])]
        kept = []
        for item in pairs:
            _, _, i, j, L = item
            if (
                mono_divides(lh, L)
                and mono_lcm(LM[i], lh) != L
                and mono_lcm(LM[j], lh) != L
            ):
                continue
            kept.append(item)
        for g, L in new_pairs:
            kept.append((sum(L), okey(L), g, h, L))
        pairs = kept
        survivors = []
        for g in G:
            if mono_divides(lh, LM[g]):
                red.set_active(g, False)
            else:
                survivors.append(g)
        survivors.append(h)
        G = survivors

    # feed inputs smallest first so early reducers are cheap
    for f in sorted(polys, key=lambda f: okey(max(f._terms, key=okey))):
        h = red.add_reduced(f._terms.items())
        if h < 0:
            continue
        LM[h] = red.lm(h)
        if not any(LM[h]):
            return [ring.one()]
        update(h)

    while pairs:
        best = min(range(len(pairs)), key=lambda k: pairs[k][:4])
        _, _, i, j, _ = pairs.pop(best)
        h = red.spoly_reduce(i, j)
        if h < 0:
            continue
        LM[h] = red.lm(h)
        if not any(LM[h]):
            return [ring.one()]
        update(h)

    for g in G:
        red.reduce_tail(g)
    G.sort(key=lambda g: okey(LM[g]), reverse=True)
    return [Polynomial(ring, dict(red.terms(g)), _clean=True) for g in G]


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``gb`` (fully reduced)."""
    if f.ring.variables != gb.ring.variables or f.ring.characteristic != gb.ring.characteristic:
        raise RingMismatchError("polynomial and basis live in different rings")
    if f.is_zero() or not gb.generators:
        return f
    try:
        terms = gb._get_reducer().normal_form(f._terms.items())
    except OverflowError:
        terms = gb._get_reducer(compiled=False).normal_form(f._terms.items())
    return Polynomial(f.ring, dict(terms), _clean=True)


def ideal_membership(f: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(f, gb).is_zero()


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial of ``f`` and ``g`` under ``order`` (used by the basis checks)."""
    key = order.key
    lf = max(f._terms, key=key)
    lg = max(g._terms, key=key)
    L = mono_lcm(lf, lg)
    p = f.ring.characteristic
    cf = pow(f._terms[lf], -1, p)
    cg = pow(g._terms[lg], -1, p)
    return f.mul_monomial(tuple(a - b for a, b in zip(L, lf)), cf) - g.mul_monomial(
        tuple(a - b for a, b in zip(L, lg)), cg
    )


def is_groebner(gb: GroebnerBasis) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    gens = gb.generators
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            if not normal_form(spoly(gens[a], gens[b], gb.order), gb).is_zero():
                return False
    return True
