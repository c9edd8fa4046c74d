import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dseq.errors import DegenerateInputError
from dseq.ideals import Ideal, colon, intersect, saturate
from dseq.polyring import Ring

R = Ring(("x1", "x2", "x3"))
J = Ideal.parse(R, ["x1^2", "x1*x2*x3", "x1*x3^2"])
m = Ideal.maximal(R)


def I(*gens):
    return Ideal.parse(R, gens)


def test_colons_of_the_gold_ideal():
    assert J.colon(R("x2")) == I("x1^2", "x1*x3")
    assert J.colon(R("x3^4")) == I("x1")
    assert J.colon(I("x3^2", "x2")) == I("x1^2", "x1*x3")


def test_saturation_by_the_maximal_ideal():
    sat, k = saturate(J, m)
    assert sat == I("x1^2", "x1*x3")
    assert k == 1


def test_primary_decomposition_intersects_back():
    parts = [I("x1"), I("x1^2", "x3"), I("x1^2", "x2", "x3^2")]
    acc = parts[0]
    for p in parts[1:]:
        acc = intersect(acc, p)
    assert acc == J


def test_non_monomial_intersection():
    assert intersect(I("x1 + x2"), I("x1 - x2")) == I("x1^2 - x2^2")
    assert intersect(I("x1"), Ideal.unit(R)) == I("x1")
    assert intersect(I("x1"), Ideal.zero(R)).is_zero()


def test_colon_edge_cases():
    assert colon(J, R("x1^2")).is_unit()
    assert colon(J, R.one()) == J
    with pytest.raises(DegenerateInputError):
        colon(J, R.zero())


def test_arithmetic():
    assert I("x1", "x2") * I("x1", "x2") == I("x1", "x2") ** 2
    assert (I("x1") + I("x2")) == I("x1", "x2")
    assert I("x1^2") <= I("x1")
    assert not I("x1") <= I("x1^2")
    assert R("x1*x2*x3") in J
    assert R("x1*x2") not in J


monomial = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
poly = st.lists(st.tuples(monomial, st.integers(1, 9)), min_size=1, max_size=2).map(
    lambda ts: sum((R.monomial(mm, c) for mm, c in ts), R.zero())
)
ideal = st.lists(poly, min_size=1, max_size=3).map(lambda gs: Ideal(R, gs))


@settings(max_examples=30, deadline=None)
@given(ideal, poly)
def test_colon_laws(A, f):
    if f.is_zero():
        return
    C = A.colon(f)
    assert A <= C
    assert Ideal(R, [g * f for g in C.generators]) <= A


@settings(max_examples=30, deadline=None)
@given(ideal, ideal)
def test_intersection_laws(A, B):
    C = A.intersect(B)
    assert C <= A and C <= B
    assert A * B <= C
