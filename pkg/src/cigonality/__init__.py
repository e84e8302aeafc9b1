"""Exact tools for covering-gonality lower bounds of very general complete intersections.

Everything is integer or rational arithmetic; irrational quantities are
handled through rational enclosures with outward rounding.
"""

from .errors import ArgumentError, CigonalityError, ExhaustedError, HypothesisError, ThresholdError
from .exactnum import Enclosure, binomial, log_enclosure, power_enclosure
from .hilbert import (
    CompleteIntersectionSpec,
    h0_ci_koszul,
    h0_ci_nested,
    h0_projective,
    h0_series_oracle,
)
from .genus import (
    CurveOnCI,
    castelnuovo_upper_bound,
    delta_lower_bound,
    genus_lower_bound,
    min_power_sum,
    plane_gap_bound,
)
from .primesel import (
    PrimeDegreeSelection,
    min_curve_degree,
    prime_pi,
    ramanujan_prime,
    select_prime_degrees,
    selection_threshold,
)
from .gonality import (
    BoundCertificate,
    Hypothesis,
    cg_bound_codim2,
    cg_bound_surface_general,
    cg_bound_surface_special,
    constant_A,
    constant_B,
)
from .neffeas import (
    Codim2System,
    CurveClass,
    FeasibilityVerdict,
    Outcome,
    SurfaceSystem,
    Theorem,
    codim2_constraints,
    codim2_decide_analytic,
    codim2_decide_bruteforce,
    surface_constraints,
    surface_decide,
    surface_decide_bruteforce,
    verify_induction,
)
from .dimcheck import DimCountReport, check_first_surface, check_second_surface
from .kernels import BACKEND

__version__ = "0.1.0"
