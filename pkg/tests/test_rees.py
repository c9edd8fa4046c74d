import itertools

import pytest
import sympy

from dseq.errors import PreconditionError
from dseq.modules import submodule
from dseq.rees import (
    check_independence,
    independence_length,
    relation_space,
    verify_assoc_graded,
    verify_rees_sym,
)
from dseq.sequences import SequenceContext


def ctx_of(variables, ideal, seq):
    return SequenceContext.parse(variables, ideal, seq)


@pytest.mark.parametrize("variables,ideal,seq", [
    (("x", "y"), [], ["x", "y"]),
    (("x", "y", "z"), [], ["x", "y", "z"]),
    (("x", "y", "z"), ["z^2"], ["x^2", "y"]),
])
def test_regular_sequences_are_of_linear_type(variables, ideal, seq):
    rep = verify_rees_sym(ctx_of(variables, ideal, seq), d_max=3)
    assert rep.holds and rep.stable


def test_gold_sequences(gold_forward, gold_reversed):
    assert verify_rees_sym(gold_forward, 3).holds
    assert verify_rees_sym(gold_reversed, 3).holds


def test_three_quadrics_fail_in_degree_two():
    ctx = ctx_of(("x", "y"), [], ["x^2", "x*y", "y^2"])
    rep = verify_rees_sym(ctx, d_max=2)
    assert (rep.holds, rep.first_failing_degree, rep.failing_internal_degree) == (False, 2, 4)
    assert rep.witness == "T1*T3 - T2^2"
    assert rep.stable
    space = relation_space(ctx, 2, 4)
    assert (space.dim_space, space.dim_subspace) == (1, 0)


def test_witness_kernel_by_brute_force():
    # quadratic forms c_a T^a with constant coefficients vanishing at (x^2, xy, y^2), over QQ
    x, y = sympy.symbols("x y")
    gens = [x ** 2, x * y, y ** 2]
    alphas = sorted(itertools.combinations_with_replacement(range(3), 2))
    images = [sympy.expand(gens[i] * gens[j]) for i, j in alphas]
    monos = [x ** a * y ** (4 - a) for a in range(5)]
    A = sympy.Matrix([[sympy.Poly(f, x, y).coeff_monomial(mm) for f in images] for mm in monos])
    kernel = A.nullspace()
    assert len(kernel) == 1
    v = kernel[0] / kernel[0][alphas.index((0, 2))]
    assert dict(zip(alphas, v)) == {(0, 0): 0, (0, 1): 0, (0, 2): 1, (1, 1): -1, (1, 2): 0, (2, 2): 0}


def test_non_homogeneous_input_rejected():
    ctx = ctx_of(("x", "y"), [], ["x + y^2", "y"])
    with pytest.raises(PreconditionError):
        verify_rees_sym(ctx)


def test_independence_for_the_maximal_ideal():
    ctx = ctx_of(("x", "y"), [], ["x", "y"])
    N = submodule(ctx.module, list(ctx.elements))
    assert check_independence(ctx, N, "colon")
    assert check_independence(ctx, N, "length", 1)
    assert independence_length(ctx, N, 1) == 2
    assert not check_independence(ctx, submodule(ctx.module, [ctx.ring("x")]), "colon")


def test_associated_graded(gold_forward, gold_reversed):
    for i in (1, 2):
        assert verify_assoc_graded(gold_forward, i, 4).holds
    with pytest.raises(PreconditionError):
        verify_assoc_graded(gold_reversed, 1, 4)
    forced = verify_assoc_graded(gold_reversed, 1, 4, force=True)
    assert forced.forced
