import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dseq.errors import ParseError
from dseq.problem import ProblemSpec, parse_problem, render_problem

from .conftest import problem_path


def test_gold_file():
    with open(problem_path("gold_forward.txt")) as fh:
        spec = parse_problem(fh.read())
    assert spec.variables == ("x1", "x2", "x3")
    assert spec.sequence == ("x2", "x3^2")
    assert spec.context().r == 2


@pytest.mark.parametrize("text", [
    "ideal = x",
    "variables = x\nvariables = y",
    "variables = x\ncolour = red",
    "variables = x\nbounds = 1",
    "variables = x\nn_max = many",
    "variables = x, , y",
    "variables = x\nnonsense",
])
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_problem(text)


def test_bad_ring_is_parse_error():
    with pytest.raises(ParseError):
        parse_problem("variables = x\ncharacteristic = 4").ring()


names = st.lists(st.sampled_from(["x", "y", "z", "w"]), min_size=1, max_size=4, unique=True)
small = st.none() | st.integers(0, 9)
pair = st.none() | st.tuples(st.integers(1, 5), st.integers(1, 5))


@settings(max_examples=60, deadline=None)
@given(names, st.sampled_from(["grevlex", "lex"]), small, small, pair, pair)
def test_round_trip(variables, order, n_max, seed, bounds, window):
    spec = ProblemSpec(
        variables=tuple(variables),
        ideal=tuple(f"{v}^2" for v in variables),
        sequence=tuple(variables[:1]),
        order=order,
        n_max=n_max,
        seed=seed,
        bounds=bounds,
        window=window,
    )
    assert parse_problem(render_problem(spec)) == spec
