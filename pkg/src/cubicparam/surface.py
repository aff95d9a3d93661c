"""Cubic surfaces: line containment, restriction to lines, the linear space of
cubics through a triple of lines, and a finite-field smoothness screen."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .errors import InputError, LinesNotSkew
from .linalg import echelon, kernel, rank
from .polynomials import BinaryForm, MPoly
from .projgeom import ProjLine, ProjPoint, lines_meet
from .scalars import QuadExt, demote, is_rational

XVARS = ("x0", "x1", "x2", "x3")


def cubic_monomials() -> list[tuple[int, ...]]:
    """The 20 exponent vectors of degree 3 in x0..x3, graded-lex descending."""
    mons = set()
    for combo in combinations_with_replacement(range(4), 3):
        e = [0, 0, 0, 0]
        for i in combo:
            e[i] += 1
        mons.add(tuple(e))
    return sorted(mons, reverse=True)


def _at(form: MPoly, point) -> object:
    coords = point.coords if isinstance(point, ProjPoint) else tuple(point)
    if any(isinstance(c, MPoly) for c in coords):
        return form.substitute(dict(zip(XVARS, coords)))
    return form.evaluate(coords)


class CubicSurface:
    """Zero set of a homogeneous cubic form in x0..x3."""

    def __init__(self, form: MPoly):
        form = form.with_vars(XVARS) if set(form.used_vars()) <= set(XVARS) else None
        if form is None:
            raise InputError("a cubic surface must be a form in x0, x1, x2, x3")
        if form.is_zero():
            raise InputError("the zero form does not define a surface")
        if not form.is_homogeneous() or form.total_degree() != 3:
            raise InputError("surface equation must be a homogeneous cubic")
        self.form = form
        self._grad = None

    @property
    def gradient_forms(self) -> tuple[MPoly, ...]:
        if self._grad is None:
            self._grad = tuple(self.form.diff(v) for v in XVARS)
        return self._grad

    def __call__(self, point) -> object:
        return _at(self.form, point)

    def gradient(self) -> tuple[MPoly, ...]:
        return self.gradient_forms

    def gradient_at(self, point) -> tuple:
        return tuple(_at(g, point) for g in self.gradient_forms)

    def polar(self, a, b) -> object:
        """Directional derivative of f at ``a`` along ``b``."""
        ga = self.gradient_at(a)
        bc = b.coords if isinstance(b, ProjPoint) else b
        return sum((g * x for g, x in zip(ga, bc)), Fraction(0))

    def is_rational(self) -> bool:
        return self.form.is_rational()

    def minpoly(self):
        for c in self.form.terms.values():
            if isinstance(c, QuadExt):
                return c.ctx
        return None

    def __eq__(self, other):
        if not isinstance(other, CubicSurface):
            return NotImplemented
        return self.form == other.form

    def __repr__(self):
        return f"CubicSurface({self.form})"


def restrict_to_line(S: CubicSurface, line: ProjLine) -> BinaryForm:
    """``f(u*A + v*B)`` as a binary cubic; coefficients of u^3, u^2 v, u v^2, v^3.

    Uses the polar expansion ``f(A), ∇f(A)·B, ∇f(B)·A, f(B)``, valid for any
    cubic form; parameter-dependent lines give ``MPoly`` coefficients.
    """
    A, B = line.A, line.B
    return BinaryForm([S(A), S.polar(A, B), S.polar(B, A), S(B)])


def contains_line(S: CubicSurface, line: ProjLine) -> bool:
    return restrict_to_line(S, line).is_zero()


def gradient(S: CubicSurface) -> tuple[MPoly, ...]:
    return S.gradient()


@dataclass
class LineTriple:
    """Two skew lines and a line meeting both."""

    l1: ProjLine
    l2: ProjLine
    m: ProjLine

    def __post_init__(self):
        if lines_meet(self.l1, self.l2):
            raise LinesNotSkew("l1 and l2 must be skew")
        if not lines_meet(self.m, self.l1) or not lines_meet(self.m, self.l2):
            raise InputError("m must meet both l1 and l2")

    def is_rational(self) -> bool:
        return self.l1.is_rational() and self.l2.is_rational() and self.m.is_rational()

    def is_conjugate_stable(self) -> bool:
        if self.l1.is_rational() or not self.m.is_rational():
            return False
        return self.l1.conjugate().same_as(self.l2)


@dataclass
class CubicSpace:
    basis: list[CubicSurface]
    dimension: int
    rank: int
    field: str
    conditions: list[list] = dc_field(default_factory=list, repr=False)

    def member(self, coeffs: Sequence) -> MPoly:
        acc = MPoly(XVARS)
        for c, b in zip(coeffs, self.basis):
            acc = acc + b.form * c
        return acc


def condition_matrix(lines: Sequence[ProjLine]) -> list[list]:
    """Rows: for each line, the 4 coefficients of the restricted cubic as
    linear functions of the 20 cubic coefficients."""
    mons = cubic_monomials()
    per_mon = []
    for e in mons:
        S = CubicSurface(MPoly(XVARS, {e: 1}))
        per_mon.append([restrict_to_line(S, l).coeffs for l in lines])
    rows = []
    for li in range(len(lines)):
        for k in range(4):
            rows.append([per_mon[j][li][k] for j in range(len(mons))])
    return rows


def _rationalize(vectors: list[list]) -> list[list]:
    """Rational basis of the Galois-stable span of ``vectors`` via traces."""
    cands = []
    for v in vectors:
        ctx = next((c.ctx for c in v if isinstance(c, QuadExt)), None)
        if ctx is None:
            cands.append([Fraction(c) for c in v])
            continue
        alpha = ctx.gen
        cands.append([c.trace() if isinstance(c, QuadExt) else 2 * c for c in v])
        cands.append([(alpha * c).trace() for c in v])
    E, _ = echelon(cands)
    return E


def cubic_space(triple: LineTriple) -> CubicSpace:
    """Basis of the cubic forms containing the three lines of ``triple``."""
    lines = [triple.l1, triple.l2, triple.m]
    rows = condition_matrix(lines)
    r = rank(rows)
    basis_vecs = kernel(rows, 20)
    fld = "Q" if all(all(is_rational(x)[0] for x in row) for row in rows) else "Q(w)"
    if fld != "Q" and triple.is_conjugate_stable():
        basis_vecs = _rationalize(basis_vecs)
        fld = "Q"
    mons = cubic_monomials()
    basis = []
    for v in basis_vecs:
        terms = {e: demote(c) for e, c in zip(mons, v) if c}
        basis.append(CubicSurface(MPoly(XVARS, terms).primitive()))
    return CubicSpace(basis, len(basis), r, fld, rows)


def smoothness_screen(S: CubicSurface, primes: Sequence[int]) -> dict:
    """Heuristic singularity search over P^3(F_p) for each usable prime.

    Finding a point where the gradient vanishes mod p is grounds for
    suspicion, not proof; finding none is not a smoothness certificate.
    """
    from .fforacle import screen_singular_points
    return screen_singular_points(S, primes)
