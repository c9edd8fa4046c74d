"""Linear-type checks, N-independence, and associated graded slices.

Forms ``F = sum_α c_α T^α`` with coefficients in ``M`` vanishing at
``(a_1, ..., a_r)`` are studied bidegree by bidegree: ``d`` is the degree in
``T`` and ``e`` the internal degree of ``F(a)``.  For homogeneous ``J`` and
``a_i`` of degrees ``δ_i`` the coefficient ``c_α`` lives in ``M_{e - α·δ}``,
so each bidegree is a finite kernel computation over F_p.  Linear type
means every such kernel is spanned by ``T``-multiples of the linear
relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .errors import DegenerateInputError, PreconditionError
from .groebner import normal_form
from .hilbert import binom, _require_sop
from .linalg import nullspace, rank
from .modules import (
    PresentedModule,
    Submodule,
    colength,
    length_of_quotient,
)
from .polyring import Monomial, Polynomial, monomials_of_degree
from .sequences import SequenceContext, check_as_condition_v, permutation_colons


class GradedPieces:
    """Graded components ``M_e`` of a homogeneous ``M = S/J`` with standard-monomial bases."""

    def __init__(self, module: PresentedModule):
        if not module.homogeneous:
            raise PreconditionError("graded computations need a homogeneous defining ideal")
        self.module = module
        self.ring = module.ring
        self.p = self.ring.characteristic
        J = module.ideal
        self._gb = None if J.is_zero() else J.gb()
        self._leads = [] if self._gb is None else self._gb.leading_monomials()
        self._basis: Dict[int, List[Monomial]] = {}
        self._index: Dict[int, Dict[Monomial, int]] = {}
        self._mult: Dict[Tuple[Polynomial, int], np.ndarray] = {}

    def basis(self, e: int) -> List[Monomial]:
        if e < 0:
            return []
        got = self._basis.get(e)
        if got is None:
            leads = self._leads
            got = [
                m
                for m in monomials_of_degree(self.ring.nvars, e)
                if not any(all(x >= y for x, y in zip(m, g)) for g in leads)
            ]
            self._basis[e] = got
            self._index[e] = {m: k for k, m in enumerate(got)}
        return got

    def dim(self, e: int) -> int:
        return len(self.basis(e))

    def reduce(self, f: Polynomial) -> Polynomial:
        return f if self._gb is None else normal_form(f, self._gb)

    def mult(self, f: Polynomial, e: int) -> np.ndarray:
        """Matrix of multiplication by homogeneous ``f`` from ``M_e`` to ``M_{e + deg f}``."""
        key = (f, e)
        got = self._mult.get(key)
        if got is not None:
            return got
        target = e + f.total_degree()
        src = self.basis(e)
        self.basis(target)
        idx = self._index[target]
        out = np.zeros((len(idx), len(src)), dtype=np.int64)
        for col, m in enumerate(src):
            g = self.reduce(f.mul_monomial(m))
            for mono, c in g.items():
                out[idx[mono], col] = c
        self._mult[key] = out
        return out

    def to_poly(self, e: int, vec) -> Polynomial:
        terms = {m: int(c) for m, c in zip(self.basis(e), vec) if int(c) % self.p}
        return Polynomial(self.ring, terms)


# ---------------------------------------------------------------------------
# relation spaces


def _exponents(r: int, d: int) -> List[Tuple[int, ...]]:
    return sorted(monomials_of_degree(r, d), reverse=True)


@dataclass
class RelationSpace:
    """Vanishing forms of ``T``-degree ``d`` and internal degree ``e``.

    ``dim_space`` counts all of them; ``dim_subspace`` those generated by
    linear vanishing forms.
    """

    d: int
    e: int
    K: int
    dim_space: int
    dim_subspace: int
    witness: Optional[str] = None

    @property
    def generated(self) -> bool:
        return self.dim_space == self.dim_subspace


class _RelationSolver:
    def __init__(self, ctx: SequenceContext):
        for i, x in enumerate(ctx.elements, start=1):
            if not x.is_homogeneous():
                raise PreconditionError(f"element {i} is not homogeneous")
        self.ctx = ctx
        self.pieces = GradedPieces(ctx.module)
        self.p = ctx.ring.characteristic
        self.r = ctx.r
        self.deg = [x.total_degree() for x in ctx.elements]
        self._powers: Dict[Tuple[int, ...], Polynomial] = {}
        self._layout: Dict[Tuple[int, int], List[Tuple[Tuple[int, ...], int, int]]] = {}
        self._kernel: Dict[Tuple[int, int], np.ndarray] = {}
        self._linear: Dict[Tuple[int, int], np.ndarray] = {}

    def power(self, alpha) -> Polynomial:
        got = self._powers.get(alpha)
        if got is None:
            f = self.ctx.ring.one()
            for x, k in zip(self.ctx.elements, alpha):
                if k:
                    f = f * x ** k
            got = self._powers[alpha] = f
        return got

    def layout(self, d: int, e: int):
        """Blocks ``(α, coefficient degree, offset)`` of the coefficient vector."""
        key = (d, e)
        got = self._layout.get(key)
        if got is None:
            got = []
            offset = 0
            for alpha in _exponents(self.r, d):
                cdeg = e - sum(a * g for a, g in zip(alpha, self.deg))
                got.append((alpha, cdeg, offset))
                offset += self.pieces.dim(cdeg)
            self._layout[key] = got
        return got

    def width(self, d: int, e: int) -> int:
        lay = self.layout(d, e)
        if not lay:
            return 0
        alpha, cdeg, off = lay[-1]
        return off + self.pieces.dim(cdeg)

    def kernel(self, d: int, e: int) -> np.ndarray:
        key = (d, e)
        got = self._kernel.get(key)
        if got is not None:
            return got
        width = self.width(d, e)
        rows = self.pieces.dim(e)
        if width == 0:
            got = np.zeros((0, 0), dtype=np.int64)
        elif rows == 0:
            got = np.eye(width, dtype=np.int64)
        else:
            A = np.zeros((rows, width), dtype=np.int64)
            for alpha, cdeg, off in self.layout(d, e):
                k = self.pieces.dim(cdeg)
                if k:
                    A[:, off:off + k] = self.pieces.mult(self.power(alpha), cdeg)
            got = nullspace(A, self.p)
        self._kernel[key] = got
        return got

    def linear_part(self, d: int, e: int) -> np.ndarray:
        """Spanning rows for the forms generated by linear vanishing forms.

        Degree ``d`` rows are ``T_j`` times degree ``d - 1`` rows, i.e. the
        block of ``α`` moves to ``α + e_j``.
        """
        key = (d, e)
        got = self._linear.get(key)
        if got is not None:
            return got
        if d == 1:
            got = self.kernel(1, e)
        else:
            width = self.width(d, e)
            target = {alpha: off for alpha, _, off in self.layout(d, e)}
            shifted_rows = []
            for j in range(self.r):
                e_prev = e - self.deg[j]
                if e_prev < 0:
                    continue
                prev = self.linear_part(d - 1, e_prev)
                if prev.size == 0:
                    continue
                shifted = np.zeros((prev.shape[0], width), dtype=np.int64)
                for alpha, cdeg, off in self.layout(d - 1, e_prev):
                    k = self.pieces.dim(cdeg)
                    if k:
                        beta = alpha[:j] + (alpha[j] + 1,) + alpha[j + 1:]
                        dst = target[beta]
                        shifted[:, dst:dst + k] = prev[:, off:off + k]
                shifted_rows.append(shifted)
            if shifted_rows:
                got = np.vstack(shifted_rows)
            else:
                got = np.zeros((0, width), dtype=np.int64)
        self._linear[key] = got
        return got

    def render(self, d: int, e: int, vec) -> str:
        vec = np.asarray(vec) % self.p
        nz = np.nonzero(vec)[0]
        if nz.size:
            inv = pow(int(vec[nz[0]]), -1, self.p)
            vec = vec * inv % self.p
        parts = []
        for alpha, cdeg, off in self.layout(d, e):
            k = self.pieces.dim(cdeg)
            coeff = self.pieces.to_poly(cdeg, vec[off:off + k]) if k else None
            if coeff is None or coeff.is_zero():
                continue
            tvars = "*".join(
                f"T{j + 1}" if a == 1 else f"T{j + 1}^{a}" for j, a in enumerate(alpha) if a
            )
            text = str(coeff)
            if coeff.is_constant():
                c = coeff.constant_term()
                c = c - self.p if c > self.p // 2 else c
                if c == 1:
                    parts.append(f"+ {tvars}")
                elif c == -1:
                    parts.append(f"- {tvars}")
                elif c < 0:
                    parts.append(f"- {-c}*{tvars}")
                else:
                    parts.append(f"+ {c}*{tvars}")
            else:
                parts.append(f"+ ({text})*{tvars}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:] if out.startswith("- ") else out

    def relation_space(self, d: int, e: int, K: int) -> RelationSpace:
        R = self.kernel(d, e)
        dim_space = R.shape[0]
        N = self.linear_part(d, e)
        dim_sub = rank(N, self.p) if N.size else 0
        witness = None
        if dim_sub < dim_space:
            for row in R:
                if rank(np.vstack([N, row]) if N.size else row[None, :], self.p) > dim_sub:
                    witness = self.render(d, e, row)
                    break
        return RelationSpace(d, e, K, dim_space, dim_sub, witness)


@dataclass
class ReesReport:
    """Unpacks as ``(holds, first_failing_degree)``."""

    holds: bool
    first_failing_degree: Optional[int]
    d_max: int
    K: int
    witness: Optional[str] = None
    failing_internal_degree: Optional[int] = None
    spaces: List[RelationSpace] = field(default_factory=list)
    stable: bool = True

    def __iter__(self):
        return iter((self.holds, self.first_failing_degree))

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "first_failing_degree": self.first_failing_degree,
            "d_max": self.d_max,
            "K": self.K,
            "stable": self.stable,
            "witness": self.witness,
            "failing_internal_degree": self.failing_internal_degree,
        }


VALIDITY_MARGIN = 2


def default_truncation(ctx: SequenceContext, d_max: int) -> int:
    return d_max * max(x.total_degree() for x in ctx.elements) + 4


def _rees_pass(solver: _RelationSolver, d_max: int, K: int):
    spaces = []
    for d in range(2, d_max + 1):
        for e in range(K):
            if solver.width(d, e) == 0:
                continue
            space = solver.relation_space(d, e, K)
            spaces.append(space)
            if not space.generated:
                return False, d, e, space.witness, spaces
    return True, None, None, None, spaces


def verify_rees_sym(ctx: SequenceContext, d_max: int = 3, K: Optional[int] = None) -> ReesReport:
    """Check that vanishing forms of degree ``2..d_max`` are generated by linear ones.

    All internal degrees ``e < K`` are examined, then the run is repeated at
    ``K + 2``; the verdict must agree at both truncations.
    """
    if d_max < 2:
        raise ValueError("d_max must be at least 2")
    if ctx.r == 0:
        raise DegenerateInputError("empty sequence")
    if ctx.module.is_zero:
        raise DegenerateInputError("the zero module")
    delta = max(x.total_degree() for x in ctx.elements)
    if K is None:
        K = default_truncation(ctx, d_max)
    if K <= d_max * delta + VALIDITY_MARGIN:
        raise PreconditionError(f"truncation K={K} must exceed d_max*deg + {VALIDITY_MARGIN}")
    solver = _RelationSolver(ctx)
    ok, d, e, witness, spaces = _rees_pass(solver, d_max, K)
    ok2, d2, e2, witness2, _ = _rees_pass(solver, d_max, K + 2)
    stable = ok == ok2
    if ok and not ok2:
        d, e, witness = d2, e2, witness2
    return ReesReport(ok and ok2, d, d_max, K, witness, e, spaces, stable)


def relation_space(ctx: SequenceContext, d: int, e: int, K: int = 0) -> RelationSpace:
    """The bidegree ``(d, e)`` relation space on its own (for inspection and tests)."""
    return _RelationSolver(ctx).relation_space(d, e, K)


# ---------------------------------------------------------------------------
# N-independence


def check_independence(ctx: SequenceContext, N: Submodule, mode: str = "colon", n: int = 1) -> bool:
    """Every vanishing form has coefficients in ``N``, tested by colons or by a length identity.

    ``colon``: each permuted last colon lies in ``N``.
    ``length``: ``l(q^nM / q^nN) = C(n+r-1, r-1) l(M/N) < ∞``.
    """
    if not check_as_condition_v(ctx):
        raise PreconditionError("the sequence is not absolutely superficial")
    if N.is_whole():
        raise DegenerateInputError("N must be a proper submodule")
    if mode == "colon":
        return all(N.carrier.contains(U) for _, U in permutation_colons(ctx))
    if mode == "length":
        if n < 1:
            raise ValueError("n must be at least 1")
        _require_sop(ctx)
        M = ctx.module
        quotient = colength(N.carrier)
        if not quotient.finite:
            return False
        top = Submodule(M, ctx.power_carrier(n), normalized=True)
        bottom = Submodule(M, ctx.q_power(n) * N.carrier + ctx.J, normalized=True)
        got = length_of_quotient(M, top, bottom)
        return got.finite and got.value == binom(n + ctx.r - 1, ctx.r - 1) * quotient.value
    raise ValueError(f"unknown mode {mode!r}")


def independence_length(ctx: SequenceContext, N: Submodule, n: int) -> int:
    """``l(q^nM / q^nN)``."""
    M = ctx.module
    top = Submodule(M, ctx.power_carrier(n), normalized=True)
    bottom = Submodule(M, ctx.q_power(n) * N.carrier + ctx.J, normalized=True)
    got = length_of_quotient(M, top, bottom)
    return got.value


# ---------------------------------------------------------------------------
# associated graded module


@dataclass(frozen=True)
class GradedSlice:
    n: int
    dimension: int


def graded_slice(ctx: SequenceContext, n: int) -> GradedSlice:
    """``dim_k q^nM / q^{n+1}M``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    _require_sop(ctx)
    hi = colength(ctx.power_carrier(n + 1)).value
    lo = colength(ctx.power_carrier(n)).value
    return GradedSlice(n, hi - lo)


@dataclass
class GradedComparison:
    """Slice dimensions of ``G_q(M/q_iM)`` against ``G_q(M)/Q_iG_q(M)``."""

    holds: bool
    i: int
    quotient_side: List[int]
    reduced_side: List[int]
    forced: bool = False

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "i": self.i,
            "rows": [
                {"n": n, "graded_of_quotient": a, "quotient_of_graded": b, "equal": a == b}
                for n, (a, b) in enumerate(zip(self.quotient_side, self.reduced_side))
            ],
            "forced": self.forced,
        }


def verify_assoc_graded(ctx: SequenceContext, i: int, n_max: int = 4, force: bool = False) -> GradedComparison:
    """Compare ``l((q^n + q_i)M / (q^{n+1} + q_i)M)`` with ``l(q^nM / (q^{n+1} + q_i q^{n-1})M)``.

    For ``n = 0`` the product ``q_i q^{-1}`` is read as ``q_i``.  Requires an
    a.s. system of parameters unless ``force`` is set.
    """
    if not 1 <= i <= ctx.r:
        raise ValueError(f"i must lie in 1..{ctx.r}")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    _require_sop(ctx)
    if not force and not check_as_condition_v(ctx):
        raise PreconditionError("the sequence is not absolutely superficial (use force for diagnostics)")
    J = ctx.J
    Qi = ctx.prefix(i)
    left, right = [], []
    for n in range(n_max + 1):
        hi = colength(ctx.q_power(n + 1) + Qi + J).value
        lo = colength(ctx.q_power(n) + Qi + J).value
        left.append(hi - lo)
        tail = Qi if n == 0 else Qi * ctx.q_power(n - 1)
        hi2 = colength(ctx.q_power(n + 1) + tail + J).value
        lo2 = colength(ctx.power_carrier(n)).value
        right.append(hi2 - lo2)
    return GradedComparison(left == right, i, left, right, force)
