"""Sequences in quotients of polynomial rings over prime fields.

Classifies sequences (absolutely superficial, filter-regular, weak,
regular, superficial), computes Hilbert-Samuel functions and the e_i
bound, compares Rees and symmetric algebras degree by degree, and
cross-checks the ideal arithmetic against a monomial oracle.
"""

from .errors import (
    BudgetExceeded,
    DegenerateInputError,
    DseqError,
    ParseError,
    PreconditionError,
    PropertyViolation,
    RingMismatchError,
)
from .hilbert import e_invariants, hs_table, hs_value, multiplicity, verify_cor43, verify_thm41
from .ideals import Ideal, colon, intersect, saturate
from .kernel import BACKEND, HAVE_COMPILED
from .modules import PresentedModule, Submodule, colength, krull_dim, module_length, submodule
from .polyring import GREVLEX, LEX, MonomialOrder, Polynomial, Ring, elimination
from .problem import ProblemSpec, load_problem, parse_problem
from .rees import check_independence, verify_assoc_graded, verify_rees_sym
from .sequences import (
    SequenceContext,
    check_as_condition_iv,
    check_as_condition_v,
    check_as_condition_vi,
    check_filter_regular,
    check_regular,
    check_superficial_bounded,
    check_weak,
    classify,
    lift_powers,
    permutation_colons,
    verify_prop22,
    verify_prop23,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DegenerateInputError",
    "DseqError",
    "ParseError",
    "PreconditionError",
    "PropertyViolation",
    "RingMismatchError",
    "e_invariants",
    "hs_table",
    "hs_value",
    "multiplicity",
    "verify_cor43",
    "verify_thm41",
    "Ideal",
    "colon",
    "intersect",
    "saturate",
    "BACKEND",
    "HAVE_COMPILED",
    "PresentedModule",
    "Submodule",
    "colength",
    "krull_dim",
    "module_length",
    "submodule",
    "GREVLEX",
    "LEX",
    "MonomialOrder",
    "Polynomial",
    "Ring",
    "elimination",
    "ProblemSpec",
    "load_problem",
    "parse_problem",
    "check_independence",
    "verify_assoc_graded",
    "verify_rees_sym",
    "SequenceContext",
    "check_as_condition_iv",
    "check_as_condition_v",
    "check_as_condition_vi",
    "check_filter_regular",
    "check_regular",
    "check_superficial_bounded",
    "check_weak",
    "classify",
    "lift_powers",
    "permutation_colons",
    "verify_prop22",
    "verify_prop23",
]
