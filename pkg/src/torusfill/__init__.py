"""Heegaard structure of Dehn fillings on torus knot exteriors."""
from ._accel import HAVE_EXTENSION
from .canopy import CanopyGraph, FillingCase, build_canopy, canopy_for_exterior, filling_case
from .lens import LensSpace, homeomorphic, normal_form, torus_flips
from .phenomena import report, survey, swap_diagram
from .slope import Slope, delta, normalize, on_line, on_line_of_lines, parse_slope
from .torus_knot import InadmissibleKnot, TorusKnot, admissibility, moser_classify

__version__ = "0.1.0"

__all__ = [
    "HAVE_EXTENSION",
    "CanopyGraph",
    "FillingCase",
    "InadmissibleKnot",
    "LensSpace",
    "Slope",
    "TorusKnot",
    "admissibility",
    "build_canopy",
    "canopy_for_exterior",
    "delta",
    "filling_case",
    "homeomorphic",
    "moser_classify",
    "normal_form",
    "normalize",
    "on_line",
    "on_line_of_lines",
    "parse_slope",
    "report",
    "survey",
    "swap_diagram",
    "torus_flips",
]
