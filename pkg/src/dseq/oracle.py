"""Brute-force monomial ideal arithmetic, used to cross-check the Groebner path.

Nothing here touches Groebner bases: ideals are sets of minimal exponent
vectors and every operation is lcm/gcd combinatorics.  ``oracle_diff`` runs
one task through both engines and shrinks any disagreement.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from itertools import combinations_with_replacement, product
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import PreconditionError

Exp = Tuple[int, ...]


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens: Iterable[Exp]) -> FrozenSet[Exp]:
    uniq = sorted(set(gens), key=lambda m: (sum(m), m))
    kept: List[Exp] = []
    for m in uniq:
        if not any(_divides(g, m) for g in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (pairwise non-dividing)."""

    nvars: int
    gens: FrozenSet[Exp]

    @classmethod
    def of(cls, nvars: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        gens = [tuple(int(x) for x in g) for g in gens]
        for g in gens:
            if len(g) != nvars or any(x < 0 for x in g):
                raise ValueError(f"bad exponent vector {g}")
        return cls(nvars, _minimalize(gens))

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, frozenset([(0,) * nvars]))

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, frozenset())

    def is_unit(self) -> bool:
        return (0,) * self.nvars in self.gens

    def contains_monomial(self, m: Sequence[int]) -> bool:
        return any(_divides(g, m) for g in self.gens)

    def sorted_gens(self) -> List[Exp]:
        return sorted(self.gens, key=lambda m: (-sum(m), tuple(-x for x in m)))

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.sorted_gens()) + ")"


def _check(a: MonomialIdeal, b: MonomialIdeal):
    if a.nvars != b.nvars:
        raise ValueError("ideals in different numbers of variables")


def mono_colon(I: MonomialIdeal, f: Sequence[int]) -> MonomialIdeal:
    """``I : x^f`` with generators ``m / gcd(m, x^f)``."""
    f = tuple(f)
    return MonomialIdeal(I.nvars, _minimalize(tuple(max(a - b, 0) for a, b in zip(m, f)) for m in I.gens))


def mono_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    return MonomialIdeal(I.nvars, _minimalize(tuple(map(max, m, n)) for m in I.gens for n in J.gens))


def mono_colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    if not J.gens:
        raise ValueError("colon by the zero ideal")
    result = None
    for g in J.gens:
        part = mono_colon(I, g)
        result = part if result is None else mono_intersect(result, part)
    return result


def mono_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    return MonomialIdeal(I.nvars, _minimalize(list(I.gens) + list(J.gens)))


def mono_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    return MonomialIdeal(I.nvars, _minimalize(tuple(map(int.__add__, m, n)) for m in I.gens for n in J.gens))


def mono_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return MonomialIdeal.unit(I.nvars)
    gens = sorted(I.gens)
    out = []
    for combo in combinations_with_replacement(gens, k):
        out.append(tuple(sum(col) for col in zip(*combo)))
    return MonomialIdeal(I.nvars, _minimalize(out))


def mono_saturate(I: MonomialIdeal, by: MonomialIdeal) -> Tuple[MonomialIdeal, int]:
    """Stable value of ``I : by^k`` and the least ``k >= 1`` where the chain stops."""
    current = mono_colon_ideal(I, by)
    k = 1
    while True:
        nxt = mono_colon_ideal(current, by)
        if nxt == current:
            return current, k
        current = nxt
        k += 1


def mono_colength(I: MonomialIdeal) -> Optional[int]:
    """Number of monomials outside ``I`` (``None`` if infinite), by box enumeration."""
    if I.is_unit():
        return 0
    bounds = []
    for v in range(I.nvars):
        pure = [g[v] for g in I.gens if all(x == 0 for k, x in enumerate(g) if k != v) and g[v] > 0]
        if not pure:
            return None
        bounds.append(min(pure))
    return sum(1 for m in product(*(range(b) for b in bounds)) if not I.contains_monomial(m))


# ---------------------------------------------------------------------------
# differential testing

OPS = ("colon", "intersect", "sum", "power", "saturate", "length")


@dataclass(frozen=True)
class OracleTask:
    """One monomial ideal computation: ``op`` on ``left`` and ``right``.

    ``right`` is an exponent vector for ``colon``, an ideal for
    ``intersect``/``sum``/``saturate``, an exponent for ``power``, unused
    for ``length``.
    """

    op: str
    nvars: int
    left: Tuple[Exp, ...]
    right: object = None

    def describe(self) -> str:
        return f"{self.op}[{self.nvars} vars] left={list(self.left)} right={self.right}"


def run_oracle(task: OracleTask):
    I = MonomialIdeal.of(task.nvars, task.left)
    if task.op == "colon":
        return mono_colon(I, task.right)
    if task.op == "intersect":
        return mono_intersect(I, MonomialIdeal.of(task.nvars, task.right))
    if task.op == "sum":
        return mono_sum(I, MonomialIdeal.of(task.nvars, task.right))
    if task.op == "power":
        return mono_power(I, task.right)
    if task.op == "saturate":
        return mono_saturate(I, MonomialIdeal.of(task.nvars, task.right))
    if task.op == "length":
        return mono_colength(I)
    raise ValueError(f"unknown op {task.op!r}")


class GroebnerEngine:
    """Runs a task through the ideal-calculus layer.

    ``fault`` (tests only) receives and returns the list of result
    generators, to simulate a corrupted basis.
    """

    def __init__(self, characteristic: int = 32003, fault: Optional[Callable] = None):
        self.characteristic = characteristic
        self.fault = fault

    def _ring(self, nvars: int):
        from .polyring import Ring

        return Ring(tuple(f"x{i + 1}" for i in range(nvars)), self.characteristic)

    def _ideal(self, ring, gens):
        from .ideals import Ideal

        return Ideal(ring, [ring.monomial(g) for g in gens])

    def _to_mono(self, ideal, nvars: int) -> MonomialIdeal:
        gens = list(ideal.gb().generators) if not ideal.is_zero() else []
        if self.fault is not None:
            gens = self.fault(gens)
        exps = []
        for g in gens:
            if not g.is_monomial():
                raise PreconditionError(f"non-monomial basis element {g}")
            exps.append(next(iter(g.terms)))
        return MonomialIdeal(nvars, frozenset(exps))

    def run(self, task: OracleTask):
        from .ideals import colon, intersect, saturate
        from .modules import colength

        ring = self._ring(task.nvars)
        I = self._ideal(ring, task.left)
        n = task.nvars
        if task.op == "colon":
            return self._to_mono(colon(I, ring.monomial(task.right)), n)
        if task.op == "intersect":
            return self._to_mono(intersect(I, self._ideal(ring, task.right)), n)
        if task.op == "sum":
            return self._to_mono(I + self._ideal(ring, task.right), n)
        if task.op == "power":
            return self._to_mono(I ** task.right, n)
        if task.op == "saturate":
            sat, k = saturate(I, self._ideal(ring, task.right))
            return self._to_mono(sat, n), k
        if task.op == "length":
            if self.fault is not None:
                # corrupt the ideal before counting
                I = self._ideal(ring, [next(iter(g.terms)) for g in self.fault(list(I.gb().generators))])
            return colength(I).value
        raise ValueError(f"unknown op {task.op!r}")


@dataclass
class DiffReport:
    agree: bool
    task: OracleTask
    groebner: object = None
    oracle: object = None
    shrunk: Optional[OracleTask] = None
    shrink_steps: int = 0

    def to_dict(self) -> dict:
        return {
            "agree": self.agree,
            "task": self.task.describe(),
            "groebner": str(self.groebner),
            "oracle": str(self.oracle),
            "shrunk": None if self.shrunk is None else self.shrunk.describe(),
            "shrink_steps": self.shrink_steps,
        }


def _validate(task: OracleTask):
    if task.op not in OPS:
        raise ValueError(f"unknown op {task.op!r}")
    for g in task.left:
        if len(g) != task.nvars:
            raise PreconditionError("non-monomial or malformed input")


def _disagrees(task: OracleTask, engine: GroebnerEngine) -> bool:
    try:
        return engine.run(task) != run_oracle(task)
    except PreconditionError:
        return True


def _shrink_candidates(task: OracleTask):
    left = list(task.left)
    for k in range(len(left)):
        if len(left) > 1:
            yield replace(task, left=tuple(left[:k] + left[k + 1:]))
    if task.op in ("intersect", "sum", "saturate"):
        right = list(task.right)
        for k in range(len(right)):
            if len(right) > 1:
                yield replace(task, right=tuple(right[:k] + right[k + 1:]))
    if task.op == "power" and task.right > 1:
        yield replace(task, right=task.right - 1)
    if task.nvars > 1:
        for v in range(task.nvars):
            drop = lambda m: tuple(x for i, x in enumerate(m) if i != v)
            right = task.right
            if task.op == "colon":
                right = drop(right)
            elif task.op in ("intersect", "sum", "saturate"):
                right = tuple(drop(m) for m in right)
            yield OracleTask(task.op, task.nvars - 1, tuple(drop(m) for m in left), right)


def shrink(task: OracleTask, engine: GroebnerEngine, max_steps: int = 200) -> Tuple[OracleTask, int]:
    """Greedily delete generators, variables or exponent while the engines still disagree."""
    steps = 0
    current = task
    improved = True
    while improved and steps < max_steps:
        improved = False
        for cand in _shrink_candidates(current):
            if _disagrees(cand, engine):
                current = cand
                steps += 1
                improved = True
                break
    return current, steps


def oracle_diff(task: OracleTask, engine: Optional[GroebnerEngine] = None) -> DiffReport:
    """Run ``task`` through both engines; shrink the task on disagreement."""
    _validate(task)
    engine = engine or GroebnerEngine()
    expected = run_oracle(task)
    try:
        got = engine.run(task)
    except PreconditionError as exc:
        got = exc
    if got == expected:
        return DiffReport(True, task, got, expected)
    small, steps = shrink(task, engine)
    return DiffReport(False, task, got, expected, small, steps)


# ---------------------------------------------------------------------------


def _random_gens(rng: random.Random, nvars: int, count: int, max_deg: int) -> Tuple[Exp, ...]:
    out = []
    for _ in range(count):
        deg = rng.randint(1, max_deg)
        m = [0] * nvars
        for _ in range(deg):
            m[rng.randrange(nvars)] += 1
        out.append(tuple(m))
    return tuple(out)


def random_task(rng: random.Random, op: Optional[str] = None, max_vars: int = 4,
                max_gens: int = 4, max_deg: int = 4) -> OracleTask:
    op = op or rng.choice(OPS)
    n = rng.randint(2, max_vars)
    left = _random_gens(rng, n, rng.randint(1, max_gens), max_deg)
    if op == "colon":
        right = _random_gens(rng, n, 1, max_deg)[0]
    elif op in ("intersect", "sum", "saturate"):
        right = _random_gens(rng, n, rng.randint(1, max_gens), max_deg if op != "saturate" else 2)
    elif op == "power":
        right = rng.randint(0, 3)
    else:
        # add pure powers often enough that finite colengths appear
        extra = [tuple(rng.randint(1, max_deg) if i == v else 0 for i in range(n)) for v in range(n)
                 if rng.random() < 0.8]
        left = left + tuple(extra)
        right = None
    return OracleTask(op, n, left, right)


def task_corpus(seed: int = 2024, count: int = 500) -> List[OracleTask]:
    """Deterministic task list cycling through every operation."""
    rng = random.Random(seed)
    return [random_task(rng, OPS[k % len(OPS)]) for k in range(count)]


def drop_last_generator(gens):
    """Fault used by the tests: lose one basis element when there are several."""
    return list(gens[:-1]) if len(gens) > 1 else list(gens)
