import os
import subprocess
import sys

import pytest

from dseq import kernel
from dseq._pykernel import Reducer as PyReducer
from dseq.polyring import GREVLEX, Ring

R = Ring(("x", "y", "z"), 32003)


def test_backend_is_reported():
    assert kernel.BACKEND in ("compiled", "python")
    assert kernel.HAVE_COMPILED == (kernel.BACKEND == "compiled")


@pytest.mark.skipif(not kernel.HAVE_COMPILED, reason="extension not built")
def test_reducers_agree_on_normal_forms():
    weights = GREVLEX.weights(3)
    gens = [R("x^2 - y*z"), R("y^2 - x*z"), R("z^3 - x*y")]
    reducers = [kernel.CReducer(3, weights, 32003), PyReducer(3, weights, 32003)]
    for red in reducers:
        for g in gens:
            red.add(g.terms.items())
    f = R("x^3*y + 5*x*y*z^2 - y^4 + 7")
    results = [sorted(red.normal_form(f.terms.items())) for red in reducers]
    assert results[0] == results[1]


def test_pure_python_fallback_selected_by_environment():
    env = dict(os.environ, DSEQ_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import dseq; print(dseq.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
