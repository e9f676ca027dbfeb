"""Exact and numeric toolkit for the 0/1 tridiagonal symmetric matrix family."""

__version__ = "0.1.0"

from .charpoly import (
    CharPolyRecord,
    InternalConsistencyError,
    Method,
    charpoly_closed_form,
    charpoly_det_oracle,
    charpoly_family,
    charpoly_recurrence,
    closed_form_coefficient,
    pascal_diagonal,
)
from .chebyshev import (
    ChebyshevPair,
    IntegralityViolation,
    chebyshev_S,
    chebyshev_U,
    chebyshev_pair,
    halve_variable,
    reflect,
)
from .fibexplore import (
    ELLIPSE_TOL,
    BigFib,
    DegenerateConfiguration,
    EllipseFit,
    NonConvergence,
    RootSet,
    ScanRow,
    conjecture_scan,
    ellipse_fit,
    fib_shift_poly,
    fibonacci,
    find_roots,
    gaussian_unit_check,
    local_extrema,
    perturbed_f29,
)
from .polycore import (
    GaussianInt,
    IntMatrix,
    IntPoly,
    bareiss_det,
    binomial,
    build_An_minus_tI,
    poly_add,
    poly_derivative,
    poly_eval_gaussian,
    poly_eval_int,
    poly_neg,
    poly_shift_mul,
)
from .spectrum import (
    ContainmentCertificate,
    EigenvalueSet,
    NotSufficient,
    containment_certificate,
    containment_search,
    containment_sufficient,
    eigenvalues_closed_form,
    golub_interval,
    spectral_radius,
)
