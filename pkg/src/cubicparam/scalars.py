"""Exact scalars: rationals (``fractions.Fraction``) and elements of a
quadratic extension Q(alpha).

A scalar is either a ``Fraction`` or a :class:`QuadExt`.  Mixed arithmetic
promotes the rational operand into the extension, so code that builds
polynomials does not need to know which field it is working over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import DivisionByZero, FieldMismatch, ReducibleMinPoly


def _is_rational_square(x: Fraction) -> bool:
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    return rn * rn == n and rd * rd == d


@dataclass(frozen=True)
class MinPoly:
    """Monic quadratic ``x^2 - p*x - q``, i.e. the relation ``alpha^2 = p*alpha + q``."""

    p: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))
        if _is_rational_square(self.discriminant):
            raise ReducibleMinPoly(
                f"x^2 - ({self.p})x - ({self.q}) has a rational root")

    @property
    def discriminant(self) -> Fraction:
        return self.p * self.p + 4 * self.q

    @classmethod
    def from_coeffs(cls, coeffs) -> "MinPoly":
        """Build from ``[1, b, c]`` meaning ``x^2 + b*x + c``."""
        lead, b, c = (Fraction(x) for x in coeffs)
        if lead == 0:
            raise ReducibleMinPoly("leading coefficient must be nonzero")
        return cls(-b / lead, -c / lead)

    def to_coeffs(self) -> list:
        return [1, -self.p, -self.q]

    @property
    def gen(self) -> "QuadExt":
        return QuadExt(0, 1, self)

    def __repr__(self):
        return f"MinPoly(p={self.p}, q={self.q})"


#: x^2 + x + 1, whose root is a primitive cube root of unity.
OMEGA = MinPoly(-1, -1)


class QuadExt:
    """``base + ext*alpha`` in Q(alpha), alpha a root of ``ctx``."""

    __slots__ = ("base", "ext", "ctx")

    def __init__(self, base, ext, ctx: MinPoly):
        self.base = base if type(base) is Fraction else Fraction(base)
        self.ext = ext if type(ext) is Fraction else Fraction(ext)
        self.ctx = ctx

    # -- coercion -------------------------------------------------------------
    def _other(self, other):
        if isinstance(other, QuadExt):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldMismatch(f"{self.ctx} vs {other.ctx}")
            return other.base, other.ext
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.base + o[0], self.ext + o[1], self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.base - o[0], self.ext - o[1], self.ctx)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return QuadExt(o[0] - self.base, o[1] - self.ext, self.ctx)

    def __neg__(self):
        return QuadExt(-self.base, -self.ext, self.ctx)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.base, self.ext
        c, d = o
        if not d:
            return QuadExt(a * c, b * c, self.ctx)
        bd = b * d
        return QuadExt(a * c + bd * self.ctx.q,
                       a * d + b * c + bd * self.ctx.p, self.ctx)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        a, b = self.base, self.ext
        p, q = self.ctx.p, self.ctx.q
        # (a + b*alpha)(a + b*p - b*alpha)
        return a * a + a * b * p - b * b * q

    def trace(self) -> Fraction:
        return 2 * self.base + self.ext * self.ctx.p

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if not n:
            raise DivisionByZero("division by zero in quadratic extension")
        c = self.conjugate()
        return QuadExt(c.base / n, c.ext / n, self.ctx)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            self._other(other)
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero")
            return QuadExt(self.base / other, self.ext / other, self.ctx)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1, 0, self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadExt":
        # alpha -> p - alpha
        return QuadExt(self.base + self.ext * self.ctx.p, -self.ext, self.ctx)

    # -- comparisons ----------------------------------------------------------
    def __bool__(self):
        return bool(self.base) or bool(self.ext)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.base == other.base and self.ext == other.ext
                    and self.ctx == other.ctx)
        if isinstance(other, (int, Fraction)):
            return not self.ext and self.base == other
        return NotImplemented

    def __hash__(self):
        if not self.ext:
            return hash(self.base)
        return hash((self.base, self.ext, self.ctx))

    def __repr__(self):
        return f"QuadExt({self.base}, {self.ext}, {self.ctx!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, QuadExt]


def as_scalar(x) -> Scalar:
    if isinstance(x, (Fraction, QuadExt)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def conjugate(x: Scalar) -> Scalar:
    if isinstance(x, QuadExt):
        return x.conjugate()
    return x


def norm(x: Scalar) -> Fraction:
    if isinstance(x, QuadExt):
        return x.norm()
    return Fraction(x) * Fraction(x)


def is_rational(x: Scalar) -> tuple[bool, Fraction | None]:
    """``(True, value)`` when ``x`` lies in Q, else ``(False, None)``."""
    if isinstance(x, QuadExt):
        if x.ext:
            return False, None
        return True, x.base
    return True, Fraction(x)


def demote(x: Scalar) -> Scalar:
    """Return a ``Fraction`` whenever ``x`` is rational."""
    ok, v = is_rational(x)
    return v if ok else x


def context_of(x) -> MinPoly | None:
    return x.ctx if isinstance(x, QuadExt) else None


def sdiv(a: Scalar, b: Scalar) -> Scalar:
    if not b:
        raise DivisionByZero("division by zero")
    return a / b


def format_scalar(x: Scalar, gen: str = "w") -> str:
    """Literal syntax understood by the expression parser: ``-3/2``, ``(1 + 2*w)``."""
    if isinstance(x, QuadExt):
        if not x.ext:
            return format_scalar(x.base, gen)
        e = x.ext
        if e == 1:
            ep = gen
        elif e == -1:
            ep = "-" + gen
        else:
            ep = f"{e}*{gen}"
        if not x.base:
            return gen if e == 1 else f"({ep})"
        sign = " - " if e < 0 else " + "
        mag = ep.lstrip("-")
        return f"({x.base}{sign}{mag})"
    return str(Fraction(x))
