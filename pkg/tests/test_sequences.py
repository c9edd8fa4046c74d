import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dseq.corpus import random_context
from dseq.errors import DegenerateInputError, PreconditionError, PropertyViolation
from dseq.ideals import Ideal
from dseq.sequences import (
    MAX_PERMUTED,
    SequenceContext,
    check_as_condition_iv,
    check_as_condition_v,
    check_as_condition_vi,
    check_filter_regular,
    check_intersection_identity,
    check_regular,
    check_superficial_bounded,
    check_weak,
    classify,
    lift_powers,
    permutation_colons,
    verify_prop22,
    verify_prop23,
)


def test_forward_order_passes_every_condition(gold_forward):
    assert check_as_condition_v(gold_forward).holds
    assert check_as_condition_iv(gold_forward).holds
    assert check_as_condition_vi(gold_forward, 3, 3).holds
    assert check_intersection_identity(gold_forward, 3).holds


def test_reversed_order_fails_at_the_first_element(gold_reversed):
    R = gold_reversed.ring
    v = check_as_condition_v(gold_reversed)
    assert (v.holds, v.index) == (False, 1)
    assert v.witnesses["colon_by_square"] == Ideal.parse(R, ["x1"])
    assert v.witnesses["colon_by_q"] == Ideal.parse(R, ["x1^2", "x1*x3"])
    assert tuple(check_as_condition_iv(gold_reversed)) == (False, 1)
    assert tuple(check_as_condition_vi(gold_reversed)) == (False, 1)


def test_filter_regular_and_weak(gold_forward, gold_reversed):
    m = gold_forward.m
    assert check_filter_regular(gold_forward, m).holds
    assert not check_filter_regular(gold_reversed, m).holds
    assert check_weak(gold_forward, gold_forward.q).holds
    assert not check_regular(gold_forward).holds


def test_zero_divisor_is_not_filter_regular():
    ctx = SequenceContext.parse(("x1", "x2"), ["x1*x2"], ["x1"])
    assert not check_filter_regular(ctx, ctx.m).holds


def test_regular_sequence():
    ctx = SequenceContext.parse(("x", "y"), [], ["x", "y"])
    assert check_regular(ctx).holds
    assert check_as_condition_v(ctx).holds


def test_superficial_window(gold_forward):
    assert check_superficial_bounded(gold_forward, 1, 1, 1, 4).holds
    with pytest.raises(ValueError):
        check_superficial_bounded(gold_forward, n_lo=0)


def test_zero_element_rejected():
    with pytest.raises(DegenerateInputError):
        SequenceContext.parse(("x", "y"), [], ["0"])


def test_permutation_colons_one_per_last_element(gold_forward):
    pairs = permutation_colons(gold_forward)
    assert [j for j, _ in pairs] == [1, 2]
    too_long = SequenceContext.parse(tuple(f"x{i}" for i in range(8)), [],
                                     [f"x{i}" for i in range(MAX_PERMUTED + 1)])
    with pytest.raises(PreconditionError):
        permutation_colons(too_long)


def test_lift_powers_floor_on_as_sequence(gold_forward):
    assert lift_powers(gold_forward, gold_forward.m) == [1, 1]
    assert lift_powers(gold_forward, gold_forward.m, n_floor=2) == [2, 2]


def test_lift_powers_raises_exponents():
    ctx = SequenceContext.parse(("x", "y", "z"), ["x^3*y", "y^2"], ["z", "x"])
    assert not check_as_condition_v(ctx).holds
    exps = lift_powers(ctx, ctx.m)
    assert exps == [1, 3]
    powered = ctx.with_elements([a ** n for a, n in zip(ctx.elements, exps)])
    assert check_as_condition_v(powered).holds


def test_lift_powers_needs_filter_regularity(gold_reversed):
    with pytest.raises(PreconditionError):
        lift_powers(gold_reversed, gold_reversed.m)


def test_weak_hypotheses_imply_as():
    ctx = SequenceContext.parse(("x", "y"), [], ["x", "y"])
    assert verify_prop22(ctx, ctx.m, "i")
    assert verify_prop23(ctx, ctx.m, list(ctx.ring.gens))


def test_classify_report(gold_forward):
    rep = classify(gold_forward, verify=True)
    assert rep.as_sequence
    d = rep.to_dict()
    assert d["as_sequence"] is True
    assert d["checks"]["v"]["holds"] is True


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_conditions_agree_on_random_contexts(rnd):
    ctx = random_context(rnd)
    v = check_as_condition_v(ctx).holds
    assert check_as_condition_iv(ctx).holds == v
    if v:
        assert check_as_condition_vi(ctx, 3, 3).holds
        for i in range(1, ctx.r):
            assert check_as_condition_v(ctx.with_elements(ctx.elements[:i])).holds
        assert check_intersection_identity(ctx, 3).holds


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_classify_verify_never_raises_on_random_contexts(rnd):
    ctx = random_context(rnd)
    try:
        classify(ctx, verify=True)
    except PropertyViolation as exc:  # pragma: no cover
        pytest.fail(str(exc))
