import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dseq.corpus import random_sop, random_module
from dseq.errors import PreconditionError
from dseq.hilbert import (
    binom,
    e_invariants,
    hs_table,
    hs_value,
    multiplicity,
    verify_cor43,
    verify_thm41,
)
from dseq.sequences import SequenceContext, check_as_condition_v


def test_binom_edges():
    assert binom(5, 2) == 10
    assert binom(-1, 0) == 0
    assert binom(3, -1) == 0
    assert binom(2, 3) == 0


def test_gold_forward_values(gold_forward):
    e = e_invariants(gold_forward)
    assert e.e == (2, 1, 1)
    assert e.colon_lengths == (1, 2)
    assert [hs_value(gold_forward, n) for n in range(7)] == [4, 9, 16, 25, 36, 49, 64]
    assert tuple(verify_thm41(gold_forward, 6)) == (True, True)
    assert multiplicity(gold_forward) == 2


def test_gold_reversed_is_strict(gold_reversed):
    assert e_invariants(gold_reversed).e == (3, -1, 2)
    rep = verify_thm41(gold_reversed, 6)
    assert tuple(rep) == (True, False)
    table = rep.table
    assert (table.values[2], table.bounds[2]) == (16, 17)


def test_polynomial_ring_in_two_variables():
    ctx = SequenceContext.parse(("x", "y"), [], ["x", "y"])
    assert e_invariants(ctx).e == (1, 0, 0)
    assert hs_table(ctx, 6).values == [binom(n + 2, 2) for n in range(7)]


@pytest.mark.parametrize("t", [1, 2, 3])
def test_multiplicity_of_powers(t):
    ctx = SequenceContext.parse(("x", "y"), [], [f"x^{t}", f"y^{t}"])
    assert multiplicity(ctx) == t * t


def test_multiplicity_of_mixed_powers():
    ctx = SequenceContext.parse(("x", "y"), [], ["x^2", "y"])
    assert multiplicity(ctx) == 2


def test_not_a_system_of_parameters():
    ctx = SequenceContext.parse(("x", "y"), [], ["x"])
    with pytest.raises(PreconditionError):
        hs_value(ctx, 0)


def test_aux_bound_on_gold_forward(gold_forward):
    rep = verify_cor43(gold_forward, gold_forward.m, 4)
    assert rep.lhs == [1, 4, 9, 14, 20]
    assert rep.rhs == [1, 6, 12, 20, 30]
    assert rep.condition_triple == (False, True, True)
    assert rep.bound_holds


def test_aux_bound_reduction_fails_for_squares():
    ctx = SequenceContext.parse(("x", "y"), [], ["x^2", "y^2"])
    assert verify_cor43(ctx, ctx.m, 3).condition_triple[0] is False


@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_bound_holds_and_is_tight_for_as(rnd):
    module = random_module(rnd, 3)
    elems = random_sop(rnd, module)
    if elems is None:
        return
    ctx = SequenceContext(module, elems)
    rep = verify_thm41(ctx, 4)
    assert rep.bound_holds
    if check_as_condition_v(ctx).holds:
        assert rep.equality_all_n
