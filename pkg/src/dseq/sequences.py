"""Sequence classification: absolutely superficial, filter-regular, weak, regular, superficial.

Every module statement about ``M = S/J`` is evaluated on carriers: the
submodule ``q_{i-1}M`` is the ideal ``C_{i-1} = (a_1, ..., a_{i-1}) + J`` and
``q_{i-1}M : x`` is ``C_{i-1} : x`` in ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DegenerateInputError, PreconditionError, PropertyViolation, RingMismatchError
from .ideals import Ideal, colon, intersect, saturate
from .modules import PresentedModule
from .polyring import Polynomial, Ring


class SequenceContext:
    """A module ``M = S/J`` together with elements ``a_1, ..., a_r`` of the maximal ideal."""

    def __init__(self, module: PresentedModule, elements: Sequence):
        ring = module.ring
        elems = []
        for idx, a in enumerate(elements, start=1):
            a = ring(a) if not isinstance(a, Polynomial) else a
            if a.ring != ring:
                raise RingMismatchError(f"element {idx} lives in another ring")
            if a.is_zero():
                raise DegenerateInputError(f"element {idx} is zero")
            if a.constant_term():
                raise PreconditionError(f"element {idx} is not in the maximal ideal")
            elems.append(a)
        self.module = module
        self.ring: Ring = ring
        self.elements: Tuple[Polynomial, ...] = tuple(elems)
        self._cache: Dict[object, Ideal] = {}

    @classmethod
    def parse(cls, variables, ideal, elements, characteristic: int = 32003) -> "SequenceContext":
        """Build from strings: ``parse(["x","y"], ["x*y"], ["x+y"])``."""
        ring = Ring(tuple(variables), characteristic)
        module = PresentedModule(ring, Ideal.parse(ring, ideal))
        return cls(module, [ring.parse(e) for e in elements])

    @property
    def r(self) -> int:
        return len(self.elements)

    @property
    def J(self) -> Ideal:
        return self.module.ideal

    def with_elements(self, elements: Sequence[Polynomial]) -> "SequenceContext":
        return SequenceContext(self.module, elements)

    def _memo(self, key, build):
        value = self._cache.get(key)
        if value is None:
            value = self._cache.setdefault(key, build())
        return value

    def prefix(self, i: int) -> Ideal:
        """``q_i = (a_1, ..., a_i)`` as an ideal of ``S`` (``q_0`` is zero)."""
        return self._memo(("q", i), lambda: Ideal(self.ring, self.elements[:i]))

    @property
    def q(self) -> Ideal:
        return self.prefix(self.r)

    def carrier(self, i: int) -> Ideal:
        """Carrier of ``q_i M``: ``q_i + J``."""
        return self._memo(("C", i), lambda: self.prefix(i) + self.J)

    def q_power(self, n: int) -> Ideal:
        """``q^n`` (``q^0`` is the unit ideal)."""
        return self._memo(("qn", n), lambda: self.q ** n)

    def power_carrier(self, n: int) -> Ideal:
        """Carrier of ``q^n M``."""
        return self._memo(("qnM", n), lambda: self.q_power(n) + self.J)

    @property
    def m(self) -> Ideal:
        return self._memo("m", lambda: Ideal.maximal(self.ring))

    def power_of(self, i: int, k: int) -> Polynomial:
        return self.elements[i - 1] ** k

    def __str__(self):
        return f"M = {self.module}, sequence ({', '.join(str(a) for a in self.elements)})"


@dataclass
class ConditionCheck:
    """Outcome of one test; unpacks as ``(holds, failing_index)``.

    ``index`` is the least failing position (1-based) or ``None``.
    """

    name: str
    holds: bool
    index: Optional[int] = None
    witnesses: Dict[str, Ideal] = field(default_factory=dict)
    bounds: Dict[str, object] = field(default_factory=dict)
    detail: str = ""

    def __bool__(self):
        return self.holds

    def __iter__(self):
        return iter((self.holds, self.index))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "index": self.index,
            "witnesses": {k: [str(g) for g in v.reduced().generators] for k, v in self.witnesses.items()},
            "bounds": dict(self.bounds),
            "detail": self.detail,
        }


def _fail(name, i, witnesses=None, bounds=None, detail=""):
    return ConditionCheck(name, False, i, dict(witnesses or {}), dict(bounds or {}), detail)


def _ok(name, bounds=None):
    return ConditionCheck(name, True, None, {}, dict(bounds or {}))


# ---------------------------------------------------------------------------
# equivalent characterizations


def check_as_condition_v(ctx: SequenceContext) -> ConditionCheck:
    """``q_{i-1}M : a_i^2 = q_{i-1}M : q`` for every ``i``."""
    for i in range(1, ctx.r + 1):
        C = ctx.carrier(i - 1)
        lhs = colon(C, ctx.power_of(i, 2))
        rhs = colon(C, ctx.q)
        if not lhs.equals(rhs):
            return _fail("v", i, {"colon_by_square": lhs, "colon_by_q": rhs})
    return _ok("v")


def check_as_condition_iv(ctx: SequenceContext) -> ConditionCheck:
    """``(q_{i-1}M : a_i) ∩ qM = q_{i-1}M`` for every ``i``."""
    qM = ctx.power_carrier(1)
    for i in range(1, ctx.r + 1):
        C = ctx.carrier(i - 1)
        meet = intersect(colon(C, ctx.elements[i - 1]), qM)
        if not C.contains(meet):
            return _fail("iv", i, {"intersection": meet, "prefix": C})
    return _ok("iv")


def check_as_condition_vi(ctx: SequenceContext, m_max: int = 3, n_max: int = 3) -> ConditionCheck:
    """``q_{i-1}M : a_i^m = q_{i-1}M : q^n`` for ``1 <= m <= m_max``, ``1 <= n <= n_max``.

    Powers are reached by iterated colons, a different route from the one
    used by :func:`check_as_condition_v`.
    """
    if m_max < 1 or n_max < 1:
        raise ValueError("bounds must be at least 1")
    bounds = {"m_max": m_max, "n_max": n_max}
    for i in range(1, ctx.r + 1):
        C = ctx.carrier(i - 1)
        a = ctx.elements[i - 1]
        base = colon(C, a)
        current = base
        for m in range(2, m_max + 1):
            current = colon(current, a)
            if not current.equals(base):
                return _fail("vi", i, {"colon_by_element": base, f"colon_by_power_{m}": current},
                             bounds, detail=f"m={m}")
        current = C
        for n in range(1, n_max + 1):
            current = colon(current, ctx.q)
            if not current.equals(base):
                return _fail("vi", i, {"colon_by_element": base, f"colon_by_q_power_{n}": current},
                             bounds, detail=f"n={n}")
    return _ok("vi", bounds)


# ---------------------------------------------------------------------------
# related sequence types


def _check_ideal_arg(ctx: SequenceContext, a: Ideal, what: str = "a"):
    if not isinstance(a, Ideal):
        raise TypeError(f"{what} must be an Ideal")
    if a.ring != ctx.ring:
        raise RingMismatchError(f"{what} lives in another ring")
    if a.is_zero():
        raise DegenerateInputError(f"{what} is the zero ideal")


def check_filter_regular(ctx: SequenceContext, a: Ideal) -> ConditionCheck:
    """``q_{i-1}M : a_i ⊆ q_{i-1}M : a^∞`` for every ``i``."""
    _check_ideal_arg(ctx, a)
    for i in range(1, ctx.r + 1):
        C = ctx.carrier(i - 1)
        col = colon(C, ctx.elements[i - 1])
        sat, k = saturate(C, a)
        if not sat.contains(col):
            return _fail("filter_regular", i, {"colon": col, "saturation": sat},
                         detail=f"saturation index {k}")
    return _ok("filter_regular")


def _weak_at(ctx: SequenceContext, i: int, a: Ideal, element: Polynomial):
    C = ctx.carrier(i - 1)
    col = colon(C, element)
    by_a = colon(C, a)
    return by_a.contains(col), col, by_a


def check_weak(ctx: SequenceContext, a: Ideal, require_membership: bool = True) -> ConditionCheck:
    """``q_{i-1}M : a_i ⊆ q_{i-1}M : a`` for every ``i``."""
    _check_ideal_arg(ctx, a)
    if require_membership:
        for i, x in enumerate(ctx.elements, start=1):
            if x not in a:
                raise PreconditionError(f"element {i} is not in the ideal a")
    for i in range(1, ctx.r + 1):
        ok, col, by_a = _weak_at(ctx, i, a, ctx.elements[i - 1])
        if not ok:
            return _fail("weak", i, {"colon": col, "colon_by_a": by_a})
    return _ok("weak")


def check_regular(ctx: SequenceContext) -> ConditionCheck:
    """``q_{i-1}M : a_i = q_{i-1}M`` for every ``i`` and ``qM != M``."""
    if ctx.power_carrier(1).is_unit():
        return _fail("regular", None, detail="qM = M")
    for i in range(1, ctx.r + 1):
        C = ctx.carrier(i - 1)
        col = colon(C, ctx.elements[i - 1])
        if not C.contains(col):
            return _fail("regular", i, {"colon": col, "prefix": C})
    return _ok("regular")


def check_superficial_bounded(
    ctx: SequenceContext, c: int = 1, d: int = 1, n_lo: int = 1, n_hi: int = 3
) -> ConditionCheck:
    """Superficiality of each ``a_i`` for ``q`` on ``M/q_{i-1}M``, on a window of ``n``.

    Checks ``((q_{i-1} + q^{n+c})M : a_i) ∩ (q^d + q_{i-1})M = (q_{i-1} + q^n)M``
    for ``n_lo <= n <= n_hi``.
    """
    if c < 1 or d < 0 or n_lo < 1 or n_lo > n_hi:
        raise ValueError("need c >= 1, d >= 0 and 1 <= n_lo <= n_hi")
    bounds = {"c": c, "d": d, "window": (n_lo, n_hi)}
    for i in range(1, ctx.r + 1):
        C = ctx.carrier(i - 1)
        floor = ctx.q_power(d) + C
        for n in range(n_lo, n_hi + 1):
            top = colon(ctx.q_power(n + c) + C, ctx.elements[i - 1])
            lhs = intersect(top, floor)
            rhs = ctx.q_power(n) + C
            if not lhs.equals(rhs):
                return _fail("superficial", i, {"lhs": lhs, "rhs": rhs}, bounds, detail=f"n={n}")
    return _ok("superficial", bounds)


def check_intersection_identity(ctx: SequenceContext, n_max: int = 3) -> ConditionCheck:
    """``q_{i-1}M ∩ q^{n+1}M = q_{i-1}q^n M`` for ``0 <= n <= n_max`` and every ``i``."""
    for i in range(1, ctx.r + 1):
        C = ctx.carrier(i - 1)
        for n in range(n_max + 1):
            lhs = intersect(C, ctx.power_carrier(n + 1))
            rhs = ctx.prefix(i - 1) * ctx.q_power(n) + ctx.J
            if not lhs.equals(rhs):
                return _fail("intersection_identity", i, {"lhs": lhs, "rhs": rhs}, detail=f"n={n}")
    return _ok("intersection_identity", {"n_max": n_max})


MAX_PERMUTED = 6


def permutation_colons(ctx: SequenceContext) -> List[Tuple[int, Ideal]]:
    """``(a_σ(1), ..., a_σ(r-1))M : a_σ(r)`` over all orderings σ, as ``(σ(r), carrier)`` pairs.

    The submodule generated by the first ``r - 1`` elements does not depend
    on their order, so the ``r!`` orderings give one colon per choice of the
    last element.
    """
    if ctx.r == 0:
        raise DegenerateInputError("empty sequence")
    if ctx.r > MAX_PERMUTED:
        raise PreconditionError(f"permutation checks support at most {MAX_PERMUTED} elements")
    out = []
    for j in range(1, ctx.r + 1):
        others = [x for k, x in enumerate(ctx.elements, start=1) if k != j]
        C = Ideal(ctx.ring, others) + ctx.J
        out.append((j, colon(C, ctx.elements[j - 1])))
    return out


# ---------------------------------------------------------------------------
# power lifting and implication checks


def lift_powers(
    ctx: SequenceContext, a: Ideal, n_floor: int = 1, budget: int = 64
) -> Optional[List[int]]:
    """Ascending exponents ``n_floor <= n_1 <= ... <= n_r`` making the powered sequence a.s.

    Each ``n_i`` is the least exponent (not below the previous one) with
    ``(a_1^{n_1}, ..., a_{i-1}^{n_{i-1}})M : a_i^{n_i}`` equal to the
    ``a``-saturation of that submodule.  The saturation index ``k`` caps
    the search, since ``a_i^k`` kills the saturation modulo the prefix.
    Returns ``None`` if the cap exceeds ``budget``.
    """
    _check_ideal_arg(ctx, a)
    if n_floor < 1:
        raise ValueError("n_floor must be at least 1")
    for i, x in enumerate(ctx.elements, start=1):
        if x not in a:
            raise PreconditionError(f"element {i} is not in the ideal a")
    if not check_filter_regular(ctx, a):
        raise PreconditionError("the sequence is not filter-regular with respect to a")
    ring = ctx.ring
    exps: List[int] = []
    prev = n_floor
    powered: List[Polynomial] = []
    for i in range(1, ctx.r + 1):
        C = Ideal(ring, powered) + ctx.J
        sat, k = saturate(C, a)
        cap = max(prev, k)
        if cap > budget:
            return None
        x = ctx.elements[i - 1]
        chosen = None
        for n in range(prev, cap + 1):
            if colon(C, x ** n).contains(sat):
                chosen = n
                break
        if chosen is None:
            raise PropertyViolation(
                f"element {i}: no exponent up to the saturation index {k} reaches the saturation"
            )
        exps.append(chosen)
        powered.append(x ** chosen)
        prev = chosen
    lifted = ctx.with_elements(powered)
    if not check_as_condition_v(lifted):
        raise PropertyViolation(f"powered sequence with exponents {exps} is not absolutely superficial")
    return exps


def verify_prop22(ctx: SequenceContext, a: Ideal, variant: str = "i") -> bool:
    """Evaluate a weak-sequence hypothesis that forces a.s. status, and check the implication.

    variant ``i``: each ``a_1, ..., a_{i-1}, a_i^2`` is ``a``-weak;
    variant ``ii``: the sequence is ``a``-weak and lies in ``a^2``.
    Both need ``q ⊆ a``.  Returns the hypothesis verdict; raises
    :class:`PropertyViolation` if it holds while condition (v) fails.
    """
    _check_ideal_arg(ctx, a)
    if not a.contains(ctx.q):
        raise PreconditionError("q is not contained in a")
    if variant == "i":
        hypothesis = True
        prefix_weak = True
        for i in range(1, ctx.r + 1):
            x = ctx.elements[i - 1]
            sq_ok, _, _ = _weak_at(ctx, i, a, x * x)
            if not (prefix_weak and sq_ok):
                hypothesis = False
                break
            prefix_weak = prefix_weak and _weak_at(ctx, i, a, x)[0]
    elif variant == "ii":
        a2 = a ** 2
        for i, x in enumerate(ctx.elements, start=1):
            if x not in a2:
                raise PreconditionError(f"element {i} is not in a^2")
        hypothesis = check_weak(ctx, a).holds
    else:
        raise ValueError("variant must be 'i' or 'ii'")
    if hypothesis and not check_as_condition_v(ctx):
        raise PropertyViolation(f"weak hypothesis ({variant}) holds but the sequence is not a.s.")
    return hypothesis


def verify_prop23(ctx: SequenceContext, a: Ideal, S_gens: Sequence[Polynomial]) -> bool:
    """If every ``a_1, ..., a_{r-1}, b`` (``b`` in ``S_gens``) is a.s., the sequence must be ``a``-weak.

    Returns the hypothesis verdict; raises :class:`PropertyViolation` if the
    implication fails.
    """
    _check_ideal_arg(ctx, a)
    if ctx.r == 0:
        raise DegenerateInputError("empty sequence")
    gens = [ctx.ring(b) if not isinstance(b, Polynomial) else b for b in S_gens]
    if not gens or not Ideal(ctx.ring, gens).equals(a):
        raise PreconditionError("S_gens do not generate a")
    if not check_filter_regular(ctx, a):
        raise PreconditionError("the sequence is not filter-regular with respect to a")
    head = list(ctx.elements[:-1])
    for b in gens:
        if not check_as_condition_v(ctx.with_elements(head + [b])):
            return False
    if not check_weak(ctx, a, require_membership=False):
        raise PropertyViolation("replacement hypothesis holds but the sequence is not a-weak")
    return True


# ---------------------------------------------------------------------------


@dataclass
class ClassificationReport:
    """Verdicts for one context; ``as_sequence`` always comes from condition (v)."""

    as_sequence: bool
    variant: str
    checks: Dict[str, ConditionCheck]
    regular: bool
    filter_regular: Optional[bool] = None
    weak: Optional[bool] = None
    superficial: Optional[bool] = None
    characteristic: int = 32003

    def to_dict(self) -> dict:
        return {
            "as_sequence": self.as_sequence,
            "variant": self.variant,
            "regular": self.regular,
            "filter_regular": self.filter_regular,
            "weak": self.weak,
            "superficial": self.superficial,
            "characteristic": self.characteristic,
            "checks": {k: v.to_dict() for k, v in self.checks.items()},
        }


def classify(
    ctx: SequenceContext,
    verify: bool = False,
    a: Optional[Ideal] = None,
    bounds: Tuple[int, int] = (3, 3),
    superficial: Optional[Tuple[int, int, int, int]] = None,
) -> ClassificationReport:
    """Classify ``ctx``; with ``verify`` also run (iv) and (vi) and demand agreement."""
    checks = {"v": check_as_condition_v(ctx)}
    verdict = checks["v"].holds
    if verify:
        checks["iv"] = check_as_condition_iv(ctx)
        checks["vi"] = check_as_condition_vi(ctx, *bounds)
        if checks["iv"].holds != verdict:
            raise PropertyViolation("conditions (iv) and (v) disagree")
        if verdict and not checks["vi"].holds:
            raise PropertyViolation(f"condition (v) holds but (vi) fails at bounds {bounds}")
    a = a if a is not None else ctx.m
    checks["regular"] = check_regular(ctx)
    checks["filter_regular"] = check_filter_regular(ctx, a)
    members = all(x in a for x in ctx.elements)
    weak = check_weak(ctx, a) if members else None
    if weak is not None:
        checks["weak"] = weak
    sup = None
    if superficial is not None:
        checks["superficial"] = check_superficial_bounded(ctx, *superficial)
        sup = checks["superficial"].holds
    return ClassificationReport(
        as_sequence=verdict,
        variant="v",
        checks=checks,
        regular=checks["regular"].holds,
        filter_regular=checks["filter_regular"].holds,
        weak=None if weak is None else weak.holds,
        superficial=sup,
        characteristic=ctx.ring.characteristic,
    )
