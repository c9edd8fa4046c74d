"""Hilbert-Samuel tabulation, the correction invariants e_0..e_r, and their bounds.

For a system of parameters ``a_1, ..., a_r`` of ``M`` the function
``n -> l(M/q^{n+1}M)`` is bounded by ``sum_i C(n+r-i, r-i) e_i`` with
equality on infinitely many ``n`` exactly for a.s. sequences.  Everything is
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import BudgetExceeded, PreconditionError, PropertyViolation
from .ideals import Ideal, colon, saturate
from .modules import colength, is_system_of_parameters
from .sequences import SequenceContext, check_as_condition_v, permutation_colons


def binom(m: int, k: int) -> int:
    """Binomial coefficient with ``C(m, k) = 0`` whenever ``k < 0`` or ``m < k``.

    This includes negative ``m``: ``C(-1, 0) = 0``, which makes the ``n = 0``
    row of the auxiliary-ideal bound count no correction term.
    """
    if k < 0 or m < k or m < 0:
        return 0
    num = 1
    for j in range(k):
        num = num * (m - j) // (j + 1)
    return num


def _require_sop(ctx: SequenceContext):
    flag = ctx._cache.get("sop")
    if flag is None:
        flag = ctx.r > 0 and is_system_of_parameters(ctx.module, ctx.elements)
        ctx._cache["sop"] = flag
    if not flag:
        raise PreconditionError("the sequence is not a system of parameters of M")


def hs_value(ctx: SequenceContext, n: int) -> int:
    """``l(M/q^{n+1}M)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    _require_sop(ctx)
    value = colength(ctx.power_carrier(n + 1))
    if not value.finite:
        raise PropertyViolation("a system of parameters produced an infinite colength")
    return value.value


@dataclass(frozen=True)
class EInvariants:
    """``e_0, ..., e_r`` and the colon lengths ``L_1, ..., L_r`` they come from.

    ``L_j = l((q_{j-1}M : a_j) / (q_{j-1}M : a_j) ∩ qM)``.
    """

    e: Tuple[int, ...]
    colon_lengths: Tuple[int, ...]
    base_length: int

    @property
    def r(self) -> int:
        return len(self.e) - 1

    def bound(self, n: int) -> int:
        """``sum_i C(n+r-i, r-i) e_i``."""
        r = self.r
        return sum(binom(n + r - i, r - i) * ei for i, ei in enumerate(self.e))

    def shifted_bound(self, n: int) -> int:
        """``sum_i C(n+r-i-1, r-i) e_i``, the same bound at ``n - 1``."""
        r = self.r
        return sum(binom(n + r - i - 1, r - i) * ei for i, ei in enumerate(self.e))


def colon_length(ctx: SequenceContext, j: int) -> int:
    """``L_j``, computed as ``l(M/qM) - l(M/((q_{j-1}M : a_j) + qM))``.

    The quotient ``U/(U ∩ qM)`` is isomorphic to ``(U + qM)/qM``, which
    sits inside the finite-length module ``M/qM``.
    """
    qM = ctx.power_carrier(1)
    U = colon(ctx.carrier(j - 1), ctx.elements[j - 1])
    big = colength(qM)
    small = colength(U + qM)
    return big.value - small.value


def e_invariants(ctx: SequenceContext) -> EInvariants:
    _require_sop(ctx)
    r = ctx.r
    base = hs_value(ctx, 0)
    L = [colon_length(ctx, j) for j in range(1, r + 1)]
    e = [0] * (r + 1)
    e[0] = base - L[r - 1]
    for i in range(1, r):
        e[i] = L[r - i] - L[r - i - 1]
    e[r] = L[0]
    return EInvariants(tuple(e), tuple(L), base)


@dataclass
class HSTable:
    """Rows ``(n, l(M/q^{n+1}M), bound)`` for ``n = 0..n_max``."""

    n_max: int
    values: List[int]
    bounds: List[int]
    e: EInvariants

    def rows(self):
        for n, (v, b) in enumerate(zip(self.values, self.bounds)):
            yield n, v, b, v == b

    def to_dict(self) -> dict:
        return {
            "e": list(self.e.e),
            "rows": [{"n": n, "lhs": v, "rhs": b, "equal": eq} for n, v, b, eq in self.rows()],
        }


def hs_table(ctx: SequenceContext, n_max: int = 6) -> HSTable:
    e = e_invariants(ctx)
    values = [hs_value(ctx, n) for n in range(n_max + 1)]
    bounds = [e.bound(n) for n in range(n_max + 1)]
    return HSTable(n_max, values, bounds, e)


@dataclass
class BoundReport:
    """Unpacks as ``(bound_holds, equality_all_n)``."""

    bound_holds: bool
    equality_all_n: bool
    table: HSTable
    as_sequence: bool
    note: str = ""

    def __iter__(self):
        return iter((self.bound_holds, self.equality_all_n))


def verify_thm41(ctx: SequenceContext, n_max: int = 6) -> BoundReport:
    """Tabulate the Hilbert-Samuel function against the e-invariant bound.

    A violated bound raises :class:`PropertyViolation`.  Equality on the
    whole window is compared with the classifier; a mismatch is reported as
    a window that is too small, since equality is promised only on an
    infinite set of ``n``.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    table = hs_table(ctx, n_max)
    for n, v, b, _ in table.rows():
        if v > b:
            raise PropertyViolation(f"bound fails at n={n}: {v} > {b}")
    equal = all(eq for *_, eq in table.rows())
    verdict = check_as_condition_v(ctx).holds
    note = ""
    if equal != verdict:
        note = "window too small: equality on the window does not match the classifier"
    return BoundReport(True, equal, table, verdict, note)


def multiplicity(ctx: SequenceContext, stabilization_window: int = 3, cap: int = 40) -> int:
    """``e(q; M)`` as the eventually constant ``r``-th difference of ``n -> l(M/q^{n+1}M)``."""
    if stabilization_window < 1:
        raise ValueError("stabilization_window must be at least 1")
    _require_sop(ctx)
    r = ctx.r
    values: List[int] = []
    for n in range(cap + 1):
        values.append(hs_value(ctx, n))
        diffs = values
        for _ in range(r):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        if len(diffs) >= stabilization_window and len(set(diffs[-stabilization_window:])) == 1:
            return diffs[-1]
    raise BudgetExceeded(f"no stabilization of the {r}-th difference up to n={cap}; raise the cap")


# ---------------------------------------------------------------------------


@dataclass
class AuxBoundReport:
    """Unpacks as ``(bound_holds, equality_all_n, condition_triple)``."""

    bound_holds: bool
    equality_all_n: bool
    condition_triple: Tuple[bool, bool, bool]
    lhs: List[int]
    rhs: List[int]
    e: EInvariants
    reduction_exponent: Optional[int] = None
    note: str = ""

    def __iter__(self):
        return iter((self.bound_holds, self.equality_all_n, self.condition_triple))

    def to_dict(self) -> dict:
        return {
            "e": list(self.e.e),
            "rows": [
                {"n": n, "lhs": l, "rhs": r, "equal": l == r}
                for n, (l, r) in enumerate(zip(self.lhs, self.rhs))
            ],
            "condition_triple": list(self.condition_triple),
            "reduction_exponent": self.reduction_exponent,
            "note": self.note,
        }


def verify_cor43(ctx: SequenceContext, a: Ideal, n_max: int = 4) -> AuxBoundReport:
    """Bound ``l(M/a^{n+1}M)`` through the e-invariants of ``q ⊆ a``.

    Right-hand side:
    ``sum_i C(n+r-i-1, r-i) e_i + C(n+r-1, r-1) l(M/(aM + (0 :_M q^n)))``.
    The condition triple is (i) ``q^n a M = a^{n+1} M`` for some ``1 <= n <= n_max``,
    (ii) the sequence is a.s., (iii) every permuted last colon lies in
    ``aM + (0 :_M m^∞)``.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if a.ring != ctx.ring:
        raise PreconditionError("a lives in another ring")
    if not a.contains(ctx.q):
        raise PreconditionError("q is not contained in a")
    aM = a + ctx.J
    if not colength(aM).finite:
        raise PreconditionError("M/aM does not have finite length")
    e = e_invariants(ctx)
    r = ctx.r
    J = ctx.J

    lhs: List[int] = []
    rhs: List[int] = []
    torsion = J  # 0 :_M q^n, carrier J : q^n
    stable = False
    for n in range(n_max + 1):
        if n > 0 and not stable:
            nxt = colon(torsion, ctx.q)
            stable = torsion.contains(nxt)
            torsion = nxt
        lhs.append(colength(a ** (n + 1) + J).value)
        extra = colength(aM + torsion).value
        rhs.append(e.shifted_bound(n) + binom(n + r - 1, r - 1) * extra)
    for n, (l, b) in enumerate(zip(lhs, rhs)):
        if l > b:
            raise PropertyViolation(f"auxiliary bound fails at n={n}: {l} > {b}")
    equal = lhs == rhs

    reduction = None
    for n in range(1, n_max + 1):
        if (ctx.q_power(n) * a + J).equals(a ** (n + 1) + J):
            reduction = n
            break
    cond_ii = check_as_condition_v(ctx).holds
    local, _ = saturate(J, ctx.m)
    target = aM + local
    cond_iii = all(target.contains(U) for _, U in permutation_colons(ctx))
    triple = (reduction is not None, cond_ii, cond_iii)
    note = ""
    if equal != all(triple):
        note = "window too small: equality on the window does not match the condition triple"
    return AuxBoundReport(True, equal, triple, lhs, rhs, e, reduction, note)
