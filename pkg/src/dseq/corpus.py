"""Seeded random contexts: monomial modules with monomial sequences."""

from __future__ import annotations

import random
from typing import List, Optional

from .ideals import Ideal
from .modules import PresentedModule, is_system_of_parameters, krull_dim
from .polyring import Polynomial, Ring
from .sequences import SequenceContext

VARIABLES = ("x", "y", "z")


def random_monomial(rng: random.Random, ring: Ring, min_deg: int, max_deg: int) -> Polynomial:
    deg = rng.randint(min_deg, max_deg)
    exps = [0] * ring.nvars
    for _ in range(deg):
        exps[rng.randrange(ring.nvars)] += 1
    return ring.monomial(exps)


def random_module(rng: random.Random, nvars: int, max_gens: int = 4, max_deg: int = 4) -> PresentedModule:
    ring = Ring(VARIABLES[:nvars])
    count = rng.randint(0, max_gens)
    gens = [random_monomial(rng, ring, 2, max_deg) for _ in range(count)]
    return PresentedModule(ring, Ideal(ring, gens))


def random_context(
    rng: random.Random,
    max_vars: int = 3,
    max_gens: int = 4,
    max_deg: int = 4,
    max_len: int = 3,
    elem_deg: int = 2,
) -> SequenceContext:
    nvars = rng.randint(2, max_vars)
    module = random_module(rng, nvars, max_gens, max_deg)
    r = rng.randint(1, max_len)
    elems = [random_monomial(rng, module.ring, 1, elem_deg) for _ in range(r)]
    return SequenceContext(module, elems)


def context_corpus(seed: int = 7, count: int = 200, **kw) -> List[SequenceContext]:
    rng = random.Random(seed)
    return [random_context(rng, **kw) for _ in range(count)]


def random_sop(
    rng: random.Random, module: PresentedModule, max_deg: int = 2, attempts: int = 50
) -> Optional[List[Polynomial]]:
    """A random monomial system of parameters of ``module``, or ``None`` after ``attempts`` tries."""
    d = krull_dim(module)
    if d == 0:
        return None
    ring = module.ring
    for _ in range(attempts):
        # pure powers make parameters likely; mixed monomials keep variety
        elems = []
        for _ in range(d):
            if rng.random() < 0.7:
                v = rng.randrange(ring.nvars)
                exps = [0] * ring.nvars
                exps[v] = rng.randint(1, max_deg)
                elems.append(ring.monomial(exps))
            else:
                elems.append(random_monomial(rng, ring, 1, max_deg))
        if is_system_of_parameters(module, elems):
            return elems
    return None


def sop_corpus(seed: int = 11, count: int = 60, nvars: int = 3, max_gens: int = 4,
               max_deg: int = 4) -> List[SequenceContext]:
    """``count`` contexts whose sequence is a system of parameters."""
    rng = random.Random(seed)
    out: List[SequenceContext] = []
    while len(out) < count:
        module = random_module(rng, nvars, max_gens, max_deg)
        elems = random_sop(rng, module)
        if elems is not None:
            out.append(SequenceContext(module, elems))
    return out


def sample_sops(module: PresentedModule, count: int, seed: int = 0, max_deg: int = 2) -> List[List[Polynomial]]:
    """Random monomial and linear systems of parameters for sampling evidence."""
    rng = random.Random(seed)
    ring = module.ring
    d = krull_dim(module)
    out = []
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        if rng.random() < 0.5:
            elems = random_sop(rng, module, max_deg, attempts=1)
        else:
            elems = []
            for _ in range(d):
                coeffs = [rng.randrange(ring.characteristic) for _ in range(ring.nvars)]
                f = ring.zero()
                for c, x in zip(coeffs, ring.gens):
                    f = f + x.scale(c)
                elems.append(f)
            if any(f.is_zero() for f in elems) or not is_system_of_parameters(module, elems):
                elems = None
        if elems:
            out.append(elems)
    return out
