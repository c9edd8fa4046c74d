"""Cyclic modules ``M = S/J`` and lengths of their subquotients.

A submodule of ``M`` is carried by an ideal ``U ⊇ J`` of ``S``; a quotient
``U/V`` of two submodules has k-length ``dim S/V - dim S/U`` whenever both
colengths are finite, which is a standard-monomial count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .errors import DegenerateInputError, PreconditionError, RingMismatchError
from .ideals import Ideal, colon
from .polyring import Monomial, Polynomial, Ring

TRUNCATION_DEGREE = 20
STABLE_RUN = 3


@dataclass(frozen=True)
class LengthValue:
    """A k-length: ``value`` is ``None`` for an infinite length.

    ``verified`` is False when the number came from a degree truncation whose
    soundness is not guaranteed (non-homogeneous input).
    """

    value: Optional[int]
    verified: bool = True
    note: str = ""

    @property
    def finite(self) -> bool:
        return self.value is not None

    def __int__(self):
        if self.value is None:
            raise ValueError("infinite length")
        return self.value

    def __str__(self):
        text = "infinite" if self.value is None else str(self.value)
        if self.note:
            text += f" ({self.note})"
        return text


class PresentedModule:
    """``S/J`` for an ideal ``J`` of the polynomial ring ``S``."""

    __slots__ = ("ring", "ideal", "homogeneous", "_dim")

    def __init__(self, ring: Ring, ideal=()):
        if not isinstance(ideal, Ideal):
            ideal = Ideal(ring, ideal)
        if ideal.ring != ring:
            raise RingMismatchError("defining ideal lives in another ring")
        self.ring = ring
        self.ideal = ideal
        self.homogeneous = ideal.is_homogeneous()
        self._dim: List[int] = []

    @classmethod
    def free(cls, ring: Ring) -> "PresentedModule":
        return cls(ring, ())

    @property
    def is_zero(self) -> bool:
        return self.ideal.is_unit()

    def zero(self) -> "Submodule":
        return Submodule(self, self.ideal)

    def whole(self) -> "Submodule":
        return Submodule(self, Ideal.unit(self.ring))

    def submodule(self, gens) -> "Submodule":
        return submodule(self, gens)

    def maximal_ideal(self) -> Ideal:
        return Ideal.maximal(self.ring)

    def __str__(self):
        return f"k[{', '.join(self.ring.variables)}]/{self.ideal}"


class Submodule:
    """Submodule ``U/J`` of ``S/J``, stored through its carrier ``U`` (always containing ``J``)."""

    __slots__ = ("module", "carrier")

    def __init__(self, module: PresentedModule, carrier: Ideal, normalized: bool = False):
        if carrier.ring != module.ring:
            raise RingMismatchError("carrier lives in another ring")
        self.module = module
        if not normalized and not carrier.contains(module.ideal):
            carrier = carrier + module.ideal
        self.carrier = carrier

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.module.ring == other.module.ring and self.carrier.equals(other.carrier)

    def __hash__(self):
        return hash(self.carrier)

    def __le__(self, other: "Submodule") -> bool:
        return other.carrier.contains(self.carrier)

    def __add__(self, other: "Submodule") -> "Submodule":
        return Submodule(self.module, self.carrier + other.carrier, normalized=True)

    def intersect(self, other: "Submodule") -> "Submodule":
        return Submodule(self.module, self.carrier.intersect(other.carrier), normalized=True)

    def is_whole(self) -> bool:
        return self.carrier.is_unit()

    def __str__(self):
        return str(self.carrier)


def submodule(M: PresentedModule, gens) -> Submodule:
    """The submodule generated by ``gens``; carrier ``(gens) + J``."""
    if isinstance(gens, Ideal):
        ideal = gens
    else:
        ideal = Ideal(M.ring, gens)
    if ideal.ring != M.ring:
        raise RingMismatchError("generators live in another ring")
    return Submodule(M, ideal + M.ideal, normalized=True)


def module_colon(M: PresentedModule, U: Submodule, by) -> Submodule:
    """``U :_M by`` with carrier ``U.carrier :_S by``."""
    return Submodule(M, colon(U.carrier, by), normalized=True)


# ---------------------------------------------------------------------------
# standard monomials


def _divisible(m: Monomial, leads: Sequence[Monomial]) -> bool:
    for g in leads:
        if all(a >= b for a, b in zip(m, g)):
            return True
    return False


def standard_monomials(leads: Sequence[Monomial], nvars: int) -> Optional[List[Monomial]]:
    """Monomials outside the monomial ideal ``leads``; ``None`` if there are infinitely many."""
    leads = list(leads)
    if not _zero_dimensional(leads, nvars):
        return None
    out: List[Monomial] = []
    # the standard set is an order ideal, so depth-first growth with pruning is exact
    stack = [tuple([0] * nvars)]
    seen = set(stack)
    if _divisible(stack[0], leads):
        return []
    while stack:
        m = stack.pop()
        out.append(m)
        for i in range(nvars):
            nxt = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nxt not in seen and not _divisible(nxt, leads):
                seen.add(nxt)
                stack.append(nxt)
    out.sort(key=lambda m: (sum(m), m))
    return out


def _zero_dimensional(leads: Sequence[Monomial], nvars: int) -> bool:
    pure = set()
    for g in leads:
        support = [i for i, e in enumerate(g) if e]
        if not support:
            return True
        if len(support) == 1:
            pure.add(support[0])
    return len(pure) == nvars


def count_in_degree(leads: Sequence[Monomial], nvars: int, degree: int) -> int:
    """Number of standard monomials of the given total degree."""
    leads = list(leads)
    if any(not any(g) for g in leads):
        return 0

    def rec(i: int, left: int, prefix: Tuple[int, ...], live: List[Monomial]) -> int:
        if i == nvars - 1:
            m = prefix + (left,)
            return 0 if _divisible(m, live) else 1
        total = 0
        for e in range(left + 1):
            # only generators whose exponents so far are met can still divide
            nxt = [g for g in live if g[i] <= e]
            total += rec(i + 1, left - e, prefix + (e,), nxt)
        return total

    if nvars == 0:
        return 1 if degree == 0 and not leads else 0
    return rec(0, degree, (), leads)


def colength(ideal: Ideal) -> LengthValue:
    """``dim_k S/I`` by counting standard monomials of the reduced basis."""
    if ideal.is_unit():
        return LengthValue(0)
    if ideal.is_zero():
        return LengthValue(None)
    std = standard_monomials(ideal.leading_monomials(), ideal.ring.nvars)
    if std is None:
        return LengthValue(None)
    return LengthValue(len(std))


def hilbert_function(ideal: Ideal, degree: int) -> int:
    """Number of standard monomials of ``S/I`` in the given degree (grevlex).

    For homogeneous ``I`` this is ``dim_k (S/I)_degree``.
    """
    if ideal.is_unit():
        return 0
    return count_in_degree(ideal.leading_monomials(), ideal.ring.nvars, degree)


def length_of_quotient(
    M: PresentedModule,
    U: Submodule,
    V: Submodule,
    truncation: int = TRUNCATION_DEGREE,
) -> LengthValue:
    """k-length of ``U/V`` for submodules ``V ⊆ U`` of ``M``."""
    if not U.carrier.contains(V.carrier):
        raise PreconditionError("V is not contained in U")
    lu = colength(U.carrier)
    lv = colength(V.carrier)
    if lu.finite and lv.finite:
        return LengthValue(lv.value - lu.value)
    if lv.finite and not lu.finite:
        # impossible for V ⊆ U, kept for clarity
        raise PreconditionError("V is not contained in U")
    if lu.finite and not lv.finite:
        return LengthValue(None)
    if U.carrier.equals(V.carrier):
        return LengthValue(0)
    homogeneous = U.carrier.is_homogeneous() and V.carrier.is_homogeneous()
    diffs = [
        hilbert_function(V.carrier, t) - hilbert_function(U.carrier, t)
        for t in range(truncation + 1)
    ]
    tail = diffs[-STABLE_RUN:]
    note = "" if homogeneous else "unverified (non-homogeneous)"
    if all(d == 0 for d in tail):
        return LengthValue(sum(diffs), verified=homogeneous, note=note)
    return LengthValue(None, verified=homogeneous, note=(note or f"up to degree {truncation}"))


def module_length(M: PresentedModule, U: Submodule) -> LengthValue:
    """``l(M/U)``."""
    return length_of_quotient(M, M.whole(), U)


def krull_dim_of_leads(leads: Sequence[Monomial], nvars: int) -> int:
    """Largest variable subset containing the support of no leading monomial."""
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in leads]
    if any(not s for s in supports):
        return -1
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def krull_dim(M: PresentedModule) -> int:
    """Krull dimension of ``S/J`` from the initial ideal of ``J``."""
    if M.is_zero:
        raise DegenerateInputError("the zero module has no dimension")
    if M.ideal.is_zero():
        return M.ring.nvars
    return krull_dim_of_leads(M.ideal.leading_monomials(), M.ring.nvars)


def is_system_of_parameters(M: PresentedModule, seq: Sequence[Polynomial]) -> bool:
    """``len(seq) == dim M`` and ``M/(seq)M`` has finite length."""
    if not seq:
        raise DegenerateInputError("empty sequence")
    if M.is_zero:
        return False
    if len(seq) != krull_dim(M):
        return False
    return module_length(M, submodule(M, seq)).finite
