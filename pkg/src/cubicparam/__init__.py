"""Exact rational parametrization of smooth cubic surfaces from two skew lines."""

from .errors import CubicParamError
from .scalars import OMEGA, MinPoly, QuadExt
from .polynomials import MPoly, RatFn, gcd, render
from .projgeom import ProjLine, ProjPlane, ProjPoint, transversal
from .surface import CubicSurface, LineTriple, contains_line, cubic_space, restrict_to_line
from .parametrizer import ParamInput, ParamResult, biquadratic, parametrize, verify
from .parser import parse_expr

__all__ = [
    "CubicParamError", "OMEGA", "MinPoly", "QuadExt", "MPoly", "RatFn", "gcd", "render",
    "ProjLine", "ProjPlane", "ProjPoint", "transversal", "CubicSurface", "LineTriple",
    "contains_line", "cubic_space", "restrict_to_line", "ParamInput", "ParamResult",
    "biquadratic", "parametrize", "verify", "parse_expr",
]

__version__ = "0.1.0"
