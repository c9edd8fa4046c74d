import os

import pytest

from dseq.problem import load_problem

PROBLEMS = os.path.join(os.path.dirname(__file__), os.pardir, "problems")


def problem_path(name):
    return os.path.join(PROBLEMS, name)


@pytest.fixture
def gold_forward():
    return load_problem(problem_path("gold_forward.txt")).context()


@pytest.fixture
def gold_reversed():
    return load_problem(problem_path("gold_reversed.txt")).context()


ACCEPTANCE_LINES = []


def record(label, ok, detail=""):
    """Log one acceptance line; the summary hook prints them all at the end."""
    line = f"{label}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
