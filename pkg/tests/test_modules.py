from hypothesis import given, settings
from hypothesis import strategies as st

from dseq.ideals import Ideal
from dseq.modules import (
    PresentedModule,
    colength,
    count_in_degree,
    is_system_of_parameters,
    krull_dim,
    length_of_quotient,
    module_length,
    standard_monomials,
    submodule,
)
from dseq.polyring import Ring, monomials_of_degree

R = Ring(("x1", "x2", "x3"))
M = PresentedModule(R, Ideal.parse(R, ["x1^2", "x1*x2*x3", "x1*x3^2"]))


def test_dimension_and_parameters():
    assert krull_dim(M) == 2
    assert is_system_of_parameters(M, [R("x2"), R("x3^2")])
    assert not is_system_of_parameters(M, [R("x2"), R("x1")])
    assert not is_system_of_parameters(M, [R("x2")])


def test_length_of_M_mod_qM():
    q = submodule(M, [R("x2"), R("x3^2")])
    assert module_length(M, q).value == 4


def test_infinite_length_is_reported():
    U = submodule(M, [R("x1")])
    V = submodule(M, [R("x1^2"), R("x1*x3")])
    value = length_of_quotient(M, U, V)
    assert not value.finite
    assert str(module_length(M, U)).startswith("infinite")


def test_colength_of_monomial_ideals():
    S = Ring(("x", "y"))
    assert colength(Ideal.parse(S, ["x^2", "y^3"])).value == 6
    assert colength(Ideal.parse(S, ["x^2", "x*y", "y^2"])).value == 3
    assert not colength(Ideal.parse(S, ["x^2"])).finite


def test_free_module_over_two_variables():
    S = Ring(("x", "y"))
    F = PresentedModule.free(S)
    assert krull_dim(F) == 2
    assert module_length(F, submodule(F, [S("x"), S("y")])).value == 1


exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@settings(max_examples=60, deadline=None)
@given(st.lists(exps, min_size=1, max_size=4), st.integers(0, 6))
def test_degree_count_matches_enumeration(leads, d):
    direct = sum(
        1 for mono in monomials_of_degree(3, d)
        if not any(all(a <= b for a, b in zip(l, mono)) for l in leads)
    )
    assert count_in_degree(leads, 3, d) == direct


@settings(max_examples=60, deadline=None)
@given(st.lists(exps, min_size=1, max_size=4))
def test_standard_monomials_sum_degree_counts(leads):
    std = standard_monomials(leads, 3)
    if std is None:
        return
    top = max(sum(s) for s in std) if std else 0
    assert len(std) == sum(count_in_degree(leads, 3, d) for d in range(top + 2))
