"""Colored Jones degrees, Jones slopes and torus knot detection from PD codes."""

from .colored import chebyshev, colored_degrees, colored_jones, framing_factor, unknot_colored_jones
from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    TorusParams,
    braid_closure,
    cable,
    mirror,
    parse_pd,
    signed_counts,
    torus_diagram,
)
from .laurent import DELTA, LaurentPoly
from .quasipoly import DegreeSequence, FitError, QuasiPolynomial, SlopeData, evaluate, fit, slope_data
from .skein import BracketBudgetError, DegreeQuad, bracket, bracket_fast, jones, t_degrees
from .states import (
    StateGraph,
    SurfaceInvariants,
    adequacy,
    is_single_cycle,
    resolve,
    state_graph,
    state_surface_invariants,
)
from .torus import (
    DetectionResult,
    adequate_degree_formula,
    cable_jx_transfer,
    crossing_criterion,
    detect_torus,
    mirror_degrees,
    recover_params,
    ssc_check,
    torus_degree_formula,
    torus_degree_sequence,
    torus_degrees,
)

__all__ = [
    "adequacy",
    "adequate_degree_formula",
    "bracket",
    "bracket_fast",
    "BracketBudgetError",
    "braid_closure",
    "cable",
    "cable_jx_transfer",
    "chebyshev",
    "colored_degrees",
    "colored_jones",
    "Crossing",
    "crossing_criterion",
    "DegreeQuad",
    "DegreeSequence",
    "DELTA",
    "detect_torus",
    "DetectionResult",
    "Diagram",
    "DiagramError",
    "evaluate",
    "fit",
    "FitError",
    "framing_factor",
    "is_single_cycle",
    "jones",
    "LaurentPoly",
    "mirror",
    "mirror_degrees",
    "parse_pd",
    "QuasiPolynomial",
    "recover_params",
    "resolve",
    "signed_counts",
    "slope_data",
    "SlopeData",
    "ssc_check",
    "state_graph",
    "state_surface_invariants",
    "StateGraph",
    "SurfaceInvariants",
    "t_degrees",
    "torus_degree_formula",
    "torus_degree_sequence",
    "torus_degrees",
    "torus_diagram",
    "TorusParams",
    "unknot_colored_jones",
]

__version__ = "0.1.0"
