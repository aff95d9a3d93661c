"""Exception hierarchy.

Every error carries a stable ``code`` string used by the CLI's JSON error
objects, and an ``exit_code`` mapping it onto the CLI exit status.
"""

from __future__ import annotations


class CubicParamError(Exception):
    code = "internal"
    exit_code = 1

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self)}


# -- arithmetic ---------------------------------------------------------------

class DivisionByZero(CubicParamError, ZeroDivisionError):
    code = "division_by_zero"


class FieldMismatch(CubicParamError, TypeError):
    code = "field_mismatch"


class ReducibleMinPoly(CubicParamError, ValueError):
    code = "reducible_minpoly"
    exit_code = 3


class Unsupported(CubicParamError):
    code = "unsupported"


class NotDivisible(CubicParamError, ArithmeticError):
    code = "not_divisible"


class NotARoot(NotDivisible):
    code = "not_a_root"


# -- geometry -----------------------------------------------------------------

class GeometryError(CubicParamError, ValueError):
    code = "geometry"
    exit_code = 3


class DegenerateLine(GeometryError):
    code = "degenerate_line"


class DegenerateSpan(GeometryError):
    code = "degenerate_span"


class SamePlane(GeometryError):
    code = "same_plane"


class DegenerateTransversal(GeometryError):
    code = "degenerate_transversal"


# -- parametrization ----------------------------------------------------------

class InputError(CubicParamError, ValueError):
    """Input data violates a precondition (lines not on S, not skew, ...)."""
    code = "invalid_input"
    exit_code = 3


class InputNotOnSurface(InputError):
    code = "input_not_on_surface"


class LinesNotSkew(InputError):
    code = "lines_not_skew"


class NotDefinedOverBase(InputError):
    code = "not_defined_over_base"


class DegenerateChart(CubicParamError):
    code = "degenerate_chart"
    exit_code = 3


class VerificationFailed(CubicParamError):
    code = "verification_failed"
    exit_code = 2

    def __init__(self, checks: list[str], report: dict | None = None):
        super().__init__("failed checks: " + ", ".join(checks))
        self.checks = checks
        self.report = report or {}

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["checks"] = list(self.checks)
        return d


# -- finite fields ------------------------------------------------------------

class BadPrime(CubicParamError, ValueError):
    code = "bad_prime"
    exit_code = 3


class NonSplitPrime(BadPrime):
    code = "non_split_prime"


class NoGoodPrime(BadPrime):
    code = "no_good_prime"


class BadReduction(CubicParamError, ValueError):
    code = "bad_reduction"
    exit_code = 3


# -- parsing ------------------------------------------------------------------

class ParseError(CubicParamError, ValueError):
    code = "parse_error"
    exit_code = 4

    def __init__(self, message: str, pos: int | None = None, text: str | None = None):
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)
        self.pos = pos
        self.text = text

    def to_dict(self) -> dict:
        d = super().to_dict()
        if self.pos is not None:
            d["position"] = self.pos
        return d


class UnknownSymbol(ParseError):
    code = "unknown_symbol"


class ExponentOverflow(ParseError):
    code = "exponent_overflow"
