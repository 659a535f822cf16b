"""tetralog: numerical certification of a family of Clausen-function,
Catalan-constant, Dirichlet-L and BBP-type identities surrounding the
integral I7 = (24/(7 sqrt 7)) * int_{pi/3}^{pi/2} ln|(tan t + sqrt 7)/(tan t - sqrt 7)| dt.
"""

__version__ = "1.0.0"

from .accel import alternating_sum
from .bbp import (
    BBPFormula,
    REGISTRY,
    eval_bbp_sum,
    extract_hex_digits,
    li3_binomial_sums,
)
from .dirichlet import l7_hurwitz, l7_series, l7_trigamma
from .errors import (
    ConvergenceError,
    DomainError,
    PrecisionError,
    QuadratureError,
    TetralogError,
    UnknownCheckError,
)
from .integrals import (
    CONSTANTS,
    integral_I7,
    integral_I_ab,
    integral_In,
    i7_closed_form,
)
from .polylog import polylog_complex
from .quad import QuadProblem, integrate
from .result import Angle, EvalResult, PolarPoint, RationalAngle
from .specfun import (
    cl2,
    cl2_rational,
    cl_even,
    cl_odd,
    clausen_cos,
    clausen_sin,
    digamma,
    harmonic,
    hurwitz_zeta,
    im_li2_polar,
    polygamma,
    trigamma,
)
from .verify import (
    CheckRecord,
    TAGS,
    aggregate_pass,
    catalan_value,
    check_ids,
    run_all,
    run_check,
)

__all__ = [
    "__version__",
    "alternating_sum",
    "BBPFormula",
    "REGISTRY",
    "eval_bbp_sum",
    "extract_hex_digits",
    "li3_binomial_sums",
    "l7_hurwitz",
    "l7_series",
    "l7_trigamma",
    "ConvergenceError",
    "DomainError",
    "PrecisionError",
    "QuadratureError",
    "TetralogError",
    "UnknownCheckError",
    "CONSTANTS",
    "integral_I7",
    "integral_I_ab",
    "integral_In",
    "i7_closed_form",
    "polylog_complex",
    "QuadProblem",
    "integrate",
    "Angle",
    "EvalResult",
    "PolarPoint",
    "RationalAngle",
    "cl2",
    "cl2_rational",
    "cl_even",
    "cl_odd",
    "clausen_cos",
    "clausen_sin",
    "digamma",
    "harmonic",
    "hurwitz_zeta",
    "im_li2_polar",
    "polygamma",
    "trigamma",
    "CheckRecord",
    "TAGS",
    "aggregate_pass",
    "catalan_value",
    "check_ids",
    "run_all",
    "run_check",
]
