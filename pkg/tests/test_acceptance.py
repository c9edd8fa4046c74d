"""Acceptance gate: one printed PASS/FAIL line per criterion, exact integer checks."""

import pytest

from dseq.corpus import context_corpus, sop_corpus
from dseq.errors import PreconditionError
from dseq.hilbert import binom, e_invariants, hs_table, multiplicity, verify_thm41
from dseq.modules import submodule
from dseq.oracle import (
    GroebnerEngine,
    MonomialIdeal,
    OracleTask,
    drop_last_generator,
    mono_colon,
    mono_saturate,
    oracle_diff,
    task_corpus,
)
from dseq.rees import check_independence, independence_length, verify_assoc_graded, verify_rees_sym
from dseq.sequences import (
    SequenceContext,
    check_as_condition_iv,
    check_as_condition_v,
    check_as_condition_vi,
    check_intersection_identity,
    classify,
    lift_powers,
    permutation_colons,
)

from .conftest import record


@pytest.fixture(scope="module")
def contexts():
    return context_corpus(seed=7, count=200)


@pytest.fixture(scope="module")
def sop_members():
    members = sop_corpus(seed=11, count=60)
    return [(ctx, check_as_condition_v(ctx).holds) for ctx in members]


def test_c1_gold_classification(gold_forward, gold_reversed):
    fw = classify(gold_forward, verify=True, bounds=(3, 3))
    rv = classify(gold_reversed, verify=True, bounds=(3, 3))
    fw_verdicts = [fw.checks[k].holds for k in ("iv", "v", "vi")]
    rv_verdicts = [rv.checks[k].holds for k in ("iv", "v", "vi")]
    ok = fw_verdicts == [True] * 3 and rv_verdicts == [False] * 3
    assert record("C1 gold example verdicts via (iv), (v), (vi)", ok,
                  f"forward {fw_verdicts}, reversed {rv_verdicts}")


def test_c2_condition_coherence(contexts):
    disagree = 0
    v_without_vi = 0
    for ctx in contexts:
        iv = check_as_condition_iv(ctx).holds
        v = check_as_condition_v(ctx).holds
        vi = check_as_condition_vi(ctx, 3, 3).holds
        disagree += iv != v
        v_without_vi += v and not vi
    ok = len(contexts) >= 200 and disagree == 0 and v_without_vi == 0
    assert record("C2 (iv) <=> (v) and (v) => (vi) on random contexts", ok,
                  f"{len(contexts)} contexts, {disagree} disagreements, {v_without_vi} (v) without (vi)")


def test_c3_prefixes_and_intersections(contexts):
    members = [ctx for ctx in contexts if check_as_condition_v(ctx).holds]
    bad = 0
    for ctx in members:
        prefixes = all(check_as_condition_v(ctx.with_elements(ctx.elements[:i])).holds
                       for i in range(1, ctx.r))
        bad += not (prefixes and check_intersection_identity(ctx, 3).holds)
    ok = len(members) > 0 and bad == 0
    assert record("C3 prefixes a.s. and intersection identity n=0..3", ok,
                  f"{len(members)} a.s. members, {bad} failures")


def test_c4_hilbert_samuel_bound(sop_members, gold_forward, gold_reversed):
    bound_failures = sum(not verify_thm41(ctx, 6).bound_holds for ctx, _ in sop_members)
    forward_equal = verify_thm41(gold_forward, 6).equality_all_n
    reversed_rep = verify_thm41(gold_reversed, 6)
    reversed_strict = any(v < b for _, v, b, _ in reversed_rep.table.rows())
    plane = SequenceContext.parse(("x", "y"), [], ["x", "y"])
    plane_values = hs_table(plane, 6).values == [binom(n + 2, 2) for n in range(7)]
    plane_e = e_invariants(plane).e == (1, 0, 0)
    ok = bound_failures == 0 and forward_equal and reversed_strict and plane_values and plane_e
    assert record("C4 Hilbert-Samuel bound, gold equality/strictness, plane values", ok,
                  f"{len(sop_members)} s.o.p. members, {bound_failures} bound failures, "
                  f"forward equal {forward_equal}, reversed strict {reversed_strict}, "
                  f"plane {plane_values and plane_e}")


def test_c5_independence(sop_members):
    plane = SequenceContext.parse(("x", "y"), [], ["x", "y"])
    qM = submodule(plane.module, list(plane.elements))
    plane_length = independence_length(plane, qM, 1)
    mismatches = 0
    checked = 0
    for ctx, as_seq in sop_members:
        if not as_seq:
            continue
        q = list(ctx.elements)
        wide = q + [g for _, U in permutation_colons(ctx) for g in U.generators]
        for gens in (q, wide):
            N = submodule(ctx.module, gens)
            if N.is_whole():
                continue
            colon_mode = check_independence(ctx, N, "colon")
            for n in (1, 2):
                checked += 1
                mismatches += check_independence(ctx, N, "length", n) != colon_mode
    ok = plane_length == 2 and checked > 0 and mismatches == 0
    assert record("C5 l(qM/qN) = 2 for the plane; colon <=> length agreement", ok,
                  f"plane length {plane_length}, {checked} comparisons, {mismatches} mismatches")


REGULAR_FIXTURES = [
    (("x", "y"), [], ["x", "y"]),
    (("x", "y", "z"), [], ["x", "y", "z"]),
    (("x", "y", "z"), ["z^2"], ["x^2", "y"]),
]


def test_c6_rees_equals_symmetric(gold_forward):
    regular = [verify_rees_sym(SequenceContext.parse(*fx), d_max=3) for fx in REGULAR_FIXTURES]
    gold = verify_rees_sym(gold_forward, d_max=3)
    quadrics = SequenceContext.parse(("x", "y"), [], ["x^2", "x*y", "y^2"])
    bad = verify_rees_sym(quadrics, d_max=3)
    ok = (all(r.holds and r.stable for r in regular) and gold.holds and gold.stable
          and not bad.holds and bad.first_failing_degree == 2
          and bad.witness == "T1*T3 - T2^2")
    assert record("C6 Rees = Sym for regular fixtures and gold; quadrics fail in degree 2", ok,
                  f"regular {[r.holds for r in regular]}, gold {gold.holds}, "
                  f"quadrics degree {bad.first_failing_degree} witness {bad.witness}")


def _oracle_filter_regular(nvars, J_gens, seq_exps):
    """m-filter-regularity of a monomial sequence, decided by the monomial oracle alone."""
    m = MonomialIdeal.of(nvars, [tuple(int(i == k) for i in range(nvars)) for k in range(nvars)])
    gens = list(J_gens)
    for a in seq_exps:
        C = MonomialIdeal.of(nvars, gens)
        sat, _ = mono_saturate(C, m)
        col = mono_colon(C, a)
        if not all(sat.contains_monomial(g) for g in col.gens):
            return False
        gens.append(a)
    return True


def test_c7a_lift_powers_on_gold_reversed(gold_reversed):
    J = [(2, 0, 0), (1, 1, 1), (1, 0, 2)]
    oracle_fr = _oracle_filter_regular(3, J, [(0, 0, 2), (0, 1, 0)])
    try:
        exps = lift_powers(gold_reversed, gold_reversed.m)
        error = None
    except PreconditionError as exc:
        exps, error = None, str(exc)
    ok = False
    if exps is not None:
        powered = gold_reversed.with_elements(
            [a ** n for a, n in zip(gold_reversed.elements, exps)])
        ok = exps == sorted(exps) and check_as_condition_v(powered).holds
    assert record("C7a lift_powers on the gold reversed sequence", ok,
                  f"oracle m-filter-regular {oracle_fr}; exponents {exps}; {error or ''}".strip())


def test_c7b_lift_powers_floor_on_as(contexts, sop_members, gold_forward):
    # an a.s. sequence is filter-regular for its own ideal q; for m only when q is m-primary
    runs = [(ctx, ctx.q) for ctx in contexts if check_as_condition_v(ctx).holds]
    runs += [(ctx, ctx.m) for ctx, as_seq in sop_members if as_seq]
    runs.append((gold_forward, gold_forward.m))
    bad = 0
    for ctx, a in runs:
        for floor in (1, 2):
            if lift_powers(ctx, a, n_floor=floor) != [floor] * ctx.r:
                bad += 1
    ok = bad == 0
    assert record("C7b lift_powers returns the floor on a.s. sequences", ok,
                  f"{len(runs)} runs x 2 floors, {bad} failures")


def test_c8_oracle_equivalence():
    reports = [oracle_diff(t) for t in task_corpus(seed=2024, count=500)]
    agree = sum(r.agree for r in reports)
    ops = sorted({r.task.op for r in reports})
    task = OracleTask("intersect", 3, ((1, 1, 0), (0, 2, 0), (0, 0, 3)), ((0, 1, 0), (1, 0, 1)))
    faulty = oracle_diff(task, GroebnerEngine(fault=drop_last_generator))
    shrunk = faulty.shrunk is not None and faulty.shrink_steps > 0
    ok = agree == 500 and not faulty.agree and shrunk
    assert record("C8 500 oracle tasks agree; fault injection shrinks", ok,
                  f"{agree}/500 agree over {ops}; shrunk to "
                  f"{faulty.shrunk.describe() if faulty.shrunk else None}")


def test_c9_multiplicity_scaling():
    got = [multiplicity(SequenceContext.parse(("x", "y"), [], [f"x^{t}", f"y^{t}"])) for t in (1, 2, 3)]
    ok = got == [1, 4, 9]
    assert record("C9 e((x^t, y^t)) = t^2 for t = 1, 2, 3", ok, f"got {got}")


def test_c10_associated_graded(sop_members, gold_forward):
    members = [gold_forward] + [ctx for ctx, as_seq in sop_members if as_seq]
    bad = sum(not verify_assoc_graded(ctx, i, 4).holds
              for ctx in members for i in range(1, ctx.r + 1))
    ok = bad == 0
    assert record("C10 associated graded comparison for n <= 4, all i", ok,
                  f"{len(members)} sequences, {bad} failures")
