"""Convexity of sections of odd functions with ``Re(1 + z f''/f') > -1/2``."""
from .bounds import (
    TailBounds,
    coeff_bound,
    distortion_bounds,
    general_case_inequality,
    log_deriv_bound,
    tail_A,
    tail_AB_closed_form,
    tail_B,
    tail_bounds,
)
from .curvature import (
    CurvatureScan,
    RadiusResult,
    curvature,
    is_convex_in_disk,
    min_curvature_on_circle,
    radius_of_convexity,
)
from .errors import ConfigurationError, DomainError
from .sampler import (
    CaratheodorySeq,
    HerglotzMeasure,
    build_member,
    p_even_from_measure,
    random_measure,
    validate_membership,
)
from .series import IDENTITY, OddSeries, SectionPoly, eval012, f0_coefficients, section

__version__ = "0.1.0"
