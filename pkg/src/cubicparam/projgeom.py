"""Projective geometry of P^3 with exact (or polynomial) coordinates.

Coordinates may be scalars or ``MPoly``; the same formulas then produce
points and lines that depend polynomially on parameters, which is how the
transversal through a symbolic point of a plane is built.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence

from .errors import DegenerateLine, DegenerateSpan, DegenerateTransversal, SamePlane
from .linalg import det3, kernel, rank
from .scalars import as_scalar, conjugate, is_rational

PLUCKER_INDEX = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _coerce(x):
    return x if hasattr(x, "terms") else as_scalar(x)


def _all_zero(xs) -> bool:
    return not any(bool(x) for x in xs)


def _rational_up_to_scale(xs) -> bool:
    pivot = next(c for c in xs if c)
    return all(is_rational(c / pivot)[0] for c in xs)


class ProjPoint:
    """A point of P^3, defined up to scale."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = tuple(_coerce(c) for c in coords)
        if len(coords) != 4:
            raise ValueError("a point of P^3 needs 4 coordinates")
        if _all_zero(coords):
            raise DegenerateSpan("all coordinates are zero")
        self.coords = coords

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def same_as(self, other: "ProjPoint") -> bool:
        a, b = self.coords, other.coords
        return all(not (a[i] * b[j] - a[j] * b[i]) for i, j in combinations(range(4), 2))

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.same_as(other)

    __hash__ = None

    def conjugate(self) -> "ProjPoint":
        return ProjPoint([conjugate(c) for c in self.coords])

    def is_rational(self) -> bool:
        """True when some rescaling has rational coordinates."""
        return _rational_up_to_scale(self.coords)

    def normalized(self) -> "ProjPoint":
        k = next(i for i, c in enumerate(self.coords) if c)
        pivot = self.coords[k]
        return ProjPoint([c / pivot for c in self.coords])

    def __repr__(self):
        return "ProjPoint(" + ", ".join(str(c) for c in self.coords) + ")"


class ProjPlane:
    """The plane ``sum(coeffs[i] * x_i) = 0``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        coeffs = tuple(_coerce(c) for c in coeffs)
        if len(coeffs) != 4:
            raise ValueError("a plane of P^3 needs 4 coefficients")
        if _all_zero(coeffs):
            raise DegenerateSpan("all plane coefficients are zero")
        self.coeffs = coeffs

    def __call__(self, x) -> object:
        c = self.coeffs
        x = x.coords if isinstance(x, ProjPoint) else x
        return c[0] * x[0] + c[1] * x[1] + c[2] * x[2] + c[3] * x[3]

    def contains(self, x) -> bool:
        if isinstance(x, ProjLine):
            return not self(x.A) and not self(x.B)
        return not self(x)

    def __eq__(self, other):
        if not isinstance(other, ProjPlane):
            return NotImplemented
        return ProjPoint(self.coeffs).same_as(ProjPoint(other.coeffs))

    __hash__ = None

    def __repr__(self):
        return "ProjPlane(" + ", ".join(str(c) for c in self.coeffs) + ")"


def plucker_of(A: Sequence, B: Sequence) -> tuple:
    return tuple(A[i] * B[j] - A[j] * B[i] for i, j in PLUCKER_INDEX)


def plucker_pairing(p: Sequence, q: Sequence) -> object:
    p01, p02, p03, p12, p13, p23 = p
    q01, q02, q03, q12, q13, q23 = q
    return (p01 * q23 - p02 * q13 + p03 * q12
            + p23 * q01 - p13 * q02 + p12 * q03)


def plucker_quadric(p: Sequence) -> object:
    p01, p02, p03, p12, p13, p23 = p
    return p01 * p23 - p02 * p13 + p03 * p12


class ProjLine:
    """The line spanned by two distinct points, with cached Plücker coordinates."""

    __slots__ = ("A", "B", "_plucker")

    def __init__(self, A, B):
        A = A if isinstance(A, ProjPoint) else ProjPoint(A)
        B = B if isinstance(B, ProjPoint) else ProjPoint(B)
        pl = plucker_of(A.coords, B.coords)
        if _all_zero(pl):
            raise DegenerateLine("spanning points coincide")
        self.A, self.B, self._plucker = A, B, pl

    @property
    def plucker(self) -> tuple:
        return self._plucker

    def point(self, u, v) -> ProjPoint:
        return ProjPoint([u * a + v * b for a, b in zip(self.A, self.B)])

    def contains_point(self, x) -> bool:
        x = x.coords if isinstance(x, ProjPoint) else x
        rows = (x, self.A.coords, self.B.coords)
        for k in range(4):
            cols = [j for j in range(4) if j != k]
            if det3([[r[j] for j in cols] for r in rows]):
                return False
        return True

    def same_as(self, other: "ProjLine") -> bool:
        p, q = self._plucker, other._plucker
        return all(not (p[i] * q[j] - p[j] * q[i]) for i, j in combinations(range(6), 2))

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return NotImplemented
        return self.same_as(other)

    __hash__ = None

    def conjugate(self) -> "ProjLine":
        return ProjLine(self.A.conjugate(), self.B.conjugate())

    def is_rational(self) -> bool:
        return _rational_up_to_scale(self._plucker)

    def __repr__(self):
        return f"ProjLine({self.A!r}, {self.B!r})"


#: Lines whose coordinates are polynomials in parameters share the same class.
SymLine = ProjLine


def plucker(line: ProjLine) -> tuple:
    return line.plucker


def lines_meet(l1: ProjLine, l2: ProjLine) -> bool:
    return not plucker_pairing(l1.plucker, l2.plucker)


def line_from_affine(base: Sequence, direction: Sequence) -> ProjLine:
    """Homogenize the affine line ``base + t*direction`` of A^3 (chart x0 = 1)."""
    return ProjLine([1, *base], [0, *direction])


def cofactor_plane(rows: Sequence[Sequence]) -> tuple:
    """Coefficients of the linear form vanishing on the three given rows."""
    out = []
    for k in range(4):
        cols = [j for j in range(4) if j != k]
        d = det3([[r[j] for j in cols] for r in rows])
        out.append(d if k % 2 == 0 else -d)
    return tuple(out)


def plane_through(x, line: ProjLine) -> ProjPlane:
    x = x.coords if isinstance(x, ProjPoint) else tuple(x)
    h = cofactor_plane((x, line.A.coords, line.B.coords))
    if _all_zero(h):
        raise DegenerateSpan("point lies on the line")
    return ProjPlane(h)


def plane_through_points(a, b, c) -> ProjPlane:
    rows = [p.coords if isinstance(p, ProjPoint) else tuple(p) for p in (a, b, c)]
    h = cofactor_plane(rows)
    if _all_zero(h):
        raise DegenerateSpan("points are collinear")
    return ProjPlane(h)


def meet_planes(h1: ProjPlane, h2: ProjPlane) -> ProjLine:
    rows = [h1.coeffs, h2.coeffs]
    if rank(rows) < 2:
        raise SamePlane("planes are proportional")
    a, b = kernel(rows, 4)
    return ProjLine(a, b)


def intersect_line_plane(line: ProjLine, h: ProjPlane) -> tuple:
    """Coordinates of ``line ∩ h``; all zero when the line lies in ``h``."""
    ha, hb = h(line.A), h(line.B)
    return tuple(hb * a - ha * b for a, b in zip(line.A, line.B))


def line_coordinates(x, line: ProjLine) -> tuple:
    """``(u, v)`` with ``x = u*A + v*B`` up to scale, for ``x`` on ``line``."""
    x = x.coords if isinstance(x, ProjPoint) else x
    A, B = line.A.coords, line.B.coords
    for i, j in combinations(range(4), 2):
        d = A[i] * B[j] - A[j] * B[i]
        if d:
            u = (x[i] * B[j] - x[j] * B[i]) / d
            v = (A[i] * x[j] - A[j] * x[i]) / d
            return u, v
    raise DegenerateLine("spanning points coincide")


class Transversal(NamedTuple):
    line: ProjLine
    on_l1: ProjPoint
    on_l2: ProjPoint


def transversal(x, l1: ProjLine, l2: ProjLine) -> Transversal:
    """The line through ``x`` meeting both skew lines, with its two meeting points.

    It is the intersection of the planes spanned by ``x`` with each line; the
    point on ``l1`` is where ``l1`` crosses the plane through ``x`` and ``l2``,
    and symmetrically.
    """
    x = x.coords if isinstance(x, ProjPoint) else tuple(x)
    try:
        h1 = plane_through(x, l1)
    except DegenerateSpan:
        raise DegenerateTransversal("point lies on l1") from None
    try:
        h2 = plane_through(x, l2)
    except DegenerateSpan:
        raise DegenerateTransversal("point lies on l2") from None
    q1 = intersect_line_plane(l1, h2)
    q2 = intersect_line_plane(l2, h1)
    if _all_zero(q1) or _all_zero(q2):
        raise DegenerateTransversal("lines are not skew")
    try:
        line = ProjLine(q1, q2)
    except DegenerateLine:
        raise DegenerateTransversal("meeting points coincide") from None
    return Transversal(line, line.A, line.B)


def standard_point(i: int) -> ProjPoint:
    return ProjPoint([Fraction(int(i == j)) for j in range(4)])
