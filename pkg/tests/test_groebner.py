import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dseq.groebner import _buchberger, groebner_basis, ideal_membership, is_groebner, normal_form
from dseq.polyring import GREVLEX, LEX, Ring

R = Ring(("x", "y", "z"), 32003)


def test_known_basis():
    gb = groebner_basis([R("x^2 - y"), R("x*y - z")], LEX)
    assert is_groebner(gb)
    assert ideal_membership(R("y^2 - x*z"), gb)
    assert not ideal_membership(R("y"), gb)


def test_unit_and_zero():
    assert groebner_basis([R("x"), R("x + 1")]).is_unit()
    assert len(groebner_basis([R.zero()], ring=R)) == 0


def test_normal_form_is_reduced():
    gb = groebner_basis([R("x^2"), R("x*y*z"), R("x*z^2")])
    f = normal_form(R("x^2*y + x*y + x*z^2*y"), gb)
    assert f == R("x*y")


def _sympy_basis(gens, order):
    x, y, z = sympy.symbols("x y z")
    exprs = [sympy.sympify(str(g).replace("^", "**")) for g in gens]
    G = sympy.groebner(exprs, x, y, z, order=order, modulus=32003)
    return sorted(sympy.Poly(g, x, y, z, modulus=32003).monoms(order=order)[0] for g in G.exprs)


def _ours(gens, order):
    gb = groebner_basis(gens, order)
    return sorted(gb.leading_monomials())


def test_matches_sympy_leading_monomials():
    cases = [
        ["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"],
        ["x^3 - y", "x*y - z^2", "y^2 + z"],
        ["x*y + z", "x^2 - 1", "y*z - x"],
    ]
    for gens in cases:
        polys = [R(g) for g in gens]
        assert _ours(polys, GREVLEX) == _sympy_basis(polys, "grevlex")
        assert _ours(polys, LEX) == _sympy_basis(polys, "lex")


monomial = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
poly = st.lists(st.tuples(monomial, st.integers(1, 50)), min_size=1, max_size=3).map(
    lambda ts: sum((R.monomial(m, c) for m, c in ts), R.zero())
)


@settings(max_examples=40, deadline=None)
@given(st.lists(poly, min_size=1, max_size=3))
def test_kernels_agree(gens):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    a = _buchberger(R, GREVLEX, gens, compiled=True)
    b = _buchberger(R, GREVLEX, gens, compiled=False)
    assert [g.terms for g in a] == [g.terms for g in b]


@settings(max_examples=40, deadline=None)
@given(st.lists(poly, min_size=1, max_size=3))
def test_generators_reduce_to_zero(gens):
    gb = groebner_basis(gens, GREVLEX, ring=R)
    assert is_groebner(gb)
    for g in gens:
        assert normal_form(g, gb).is_zero()
