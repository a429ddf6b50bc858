"""carmpoly: digit-sum arithmetic of Carmichael-like numbers.

Set predicates driven by base-p digit sums, denominators of Bernoulli
numbers and polynomials, polygonal decompositions, Knodel sets, and a
segmented enumeration engine that reproduces the reference count tables.
"""

from ._kernels import NUMBA_ENABLED
from .berndenom import (
    DenominatorParts,
    bernoulli_number_exact,
    bernoulli_polynomial_exact,
    denom_bernoulli_number,
    denom_poly,
    denom_poly_no_const,
    denominator_parts,
    oracle_denominators,
)
from .config import RunConfig, load_run_config
from .digitsum import DigitExpansion, digit_sum, expand, factorial_valuation
from .errors import CarmpolyError, DomainError, RangeError, ResourceError
from .factorint import (
    Factorization,
    factorize,
    greatest_prime_factor,
    is_prime,
    is_squarefree,
    radical,
    shifted_index,
)
from .numbersets import (
    KnodelQuery,
    MembershipReport,
    carmichael_lambda,
    in_S,
    in_S_d,
    is_carmichael_digit,
    is_carmichael_korselt,
    is_knodel,
    is_knodel_bruteforce,
    is_primary_carmichael,
    least_modular_index,
    membership_report,
    rho,
)
from .polygon import (
    AlphaReport,
    PolygonalForm,
    carmichael_polygonal,
    classify_low_ell,
    polygonal,
    polygonal_decomposition,
    sharp_alpha,
)
from .scan import (
    CountRow,
    Segment,
    build_segment,
    carmichael_route_mismatches,
    count_sets,
    dividing_fixed_point_mismatches,
    first_occurrence,
    stream_S,
)

__version__ = "0.1.0"

__all__ = [
    "NUMBA_ENABLED",
    "AlphaReport",
    "CarmpolyError",
    "CountRow",
    "DenominatorParts",
    "DigitExpansion",
    "DomainError",
    "Factorization",
    "KnodelQuery",
    "MembershipReport",
    "PolygonalForm",
    "RangeError",
    "ResourceError",
    "RunConfig",
    "Segment",
    "bernoulli_number_exact",
    "bernoulli_polynomial_exact",
    "build_segment",
    "carmichael_lambda",
    "carmichael_polygonal",
    "carmichael_route_mismatches",
    "classify_low_ell",
    "count_sets",
    "denom_bernoulli_number",
    "denom_poly",
    "denom_poly_no_const",
    "denominator_parts",
    "digit_sum",
    "dividing_fixed_point_mismatches",
    "expand",
    "factorial_valuation",
    "factorize",
    "first_occurrence",
    "greatest_prime_factor",
    "in_S",
    "in_S_d",
    "is_carmichael_digit",
    "is_carmichael_korselt",
    "is_knodel",
    "is_knodel_bruteforce",
    "is_prime",
    "is_primary_carmichael",
    "is_squarefree",
    "least_modular_index",
    "load_run_config",
    "membership_report",
    "oracle_denominators",
    "polygonal",
    "polygonal_decomposition",
    "radical",
    "rho",
    "sharp_alpha",
    "shifted_index",
    "stream_S",
]
