"""Commutative-algebra engine for depth, cohomological dimension and linkage."""

from .errors import LinklabError
from .groebner import Ideal
from .ideal_ops import colon, height, intersect, is_complete_intersection, krull_dimension
from .linkage import canonical_depth, even_link_chain, find_ci_link, link, verify_link
from .polyring import Polynomial, RingDescriptor
from .report import InvariantReport, invariant_report
from .resolution import (
    cd_bounds_char_p,
    depth_and_pd,
    frobenius_vanishing_probe,
    minimal_free_resolution,
)
from .stanley_reisner import sqf_invariants
from .textformat import format_ideal, parse_ideal_file, parse_ideal_text

__version__ = "0.1.0"

__all__ = [
    "Ideal",
    "InvariantReport",
    "LinklabError",
    "Polynomial",
    "RingDescriptor",
    "canonical_depth",
    "cd_bounds_char_p",
    "colon",
    "depth_and_pd",
    "even_link_chain",
    "find_ci_link",
    "format_ideal",
    "frobenius_vanishing_probe",
    "height",
    "intersect",
    "invariant_report",
    "is_complete_intersection",
    "krull_dimension",
    "link",
    "minimal_free_resolution",
    "parse_ideal_file",
    "parse_ideal_text",
    "sqf_invariants",
    "verify_link",
]
