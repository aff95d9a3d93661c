"""Rational parametrization of a cubic surface from two skew lines on it.

For a point ``x`` of a plane ``H`` there is exactly one line through ``x``
meeting both skew lines ``l1`` and ``l2``.  That line meets the surface in
its points on ``l1`` and ``l2`` and in one further point, which is the image
of ``x``.  Working with a symbolic ``x`` gives four forms in the chart
coordinates ``(y0:y1:y2)`` of ``H``.

Nothing here calls a nonlinear solver: the transversal comes from two plane
computations and the third intersection point from exact division of the
restricted binary cubic by its two known linear factors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (DegenerateChart, DegenerateTransversal, InputError,
                     InputNotOnSurface, LinesNotSkew, NotARoot,
                     NotDefinedOverBase, VerificationFailed)
from .linalg import kernel
from .polynomials import (MPoly, RatFn, exact_divide_binary, gcd_many, linear_form,
                          root_of_linear)
from .projgeom import (ProjLine, ProjPlane, ProjPoint, intersect_line_plane,
                       line_coordinates, lines_meet, plane_through_points,
                       standard_point, transversal)
from .surface import XVARS, CubicSurface, contains_line, restrict_to_line

YVARS = ("y0", "y1", "y2")
UVVARS = ("u0", "u1", "v0", "v1")

#: Degree of the map when the plane contains a line of S meeting l1 and l2.
DEGREE_WITH_TRANSVERSAL = 3
#: Degree observed for a plane containing no such line (see README).
DEGREE_GENERIC = 4


@dataclass
class ParamInput:
    surface: CubicSurface
    l1: ProjLine
    l2: ProjLine
    m: ProjLine | None = None
    plane: ProjPlane | None = None
    chart: tuple[ProjPoint, ProjPoint, ProjPoint] | None = None
    allow_extension: bool = False


def field_kind(l1: ProjLine, l2: ProjLine) -> str:
    """``"rational"``, ``"conjugate"`` (swapped by conjugation) or ``"extension"``."""
    if l1.is_rational() and l2.is_rational():
        return "rational"
    try:
        if l1.conjugate().same_as(l2):
            return "conjugate"
    except Exception:
        pass
    return "extension"


def validate_input(inp: ParamInput) -> str:
    S = inp.surface
    if not contains_line(S, inp.l1):
        raise InputNotOnSurface("l1 does not lie on the surface")
    if not contains_line(S, inp.l2):
        raise InputNotOnSurface("l2 does not lie on the surface")
    if lines_meet(inp.l1, inp.l2):
        raise LinesNotSkew("l1 and l2 meet")
    if inp.m is not None:
        if not contains_line(S, inp.m):
            raise InputNotOnSurface("m does not lie on the surface")
        if not (lines_meet(inp.m, inp.l1) and lines_meet(inp.m, inp.l2)):
            raise InputError("m must meet both l1 and l2")
    kind = field_kind(inp.l1, inp.l2)
    if kind == "extension" and not inp.allow_extension:
        raise NotDefinedOverBase(
            "l1 and l2 must both be rational or conjugate to each other")
    if kind != "extension" and not S.is_rational():
        raise NotDefinedOverBase("surface equation must have rational coefficients")
    if inp.plane is not None:
        for name, l in (("l1", inp.l1), ("l2", inp.l2)):
            if inp.plane.contains(l):
                raise InputError(f"plane contains {name}")
    return kind


# -----------------------------------------------------------------------------
# choosing the plane

_PENCIL_CANDIDATES = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1)]


def _planes_through(m: ProjLine) -> tuple[ProjPlane, ProjPlane]:
    h1, h2 = kernel([m.A.coords, m.B.coords], 4)
    return ProjPlane(h1), ProjPlane(h2)


def _chart_with_line(H: ProjPlane, m: ProjLine) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
    for i in range(4):
        e = standard_point(i)
        if H.contains(e) and not m.contains_point(e):
            return (m.A, m.B, e)
    for i, j in combinations(range(4), 2):
        c = [Fraction(0)] * 4
        c[i], c[j] = H.coeffs[j], -H.coeffs[i]
        if any(c):
            pt = ProjPoint(c)
            if not m.contains_point(pt):
                return (m.A, m.B, pt)
    raise DegenerateChart("no chart point found off m")  # pragma: no cover


def chart_for_plane(H: ProjPlane, m: ProjLine | None = None) -> tuple[ProjPoint, ...]:
    if m is not None and H.contains(m):
        return _chart_with_line(H, m)
    return tuple(ProjPoint(v) for v in kernel([H.coeffs], 4))


def choose_plane(l1: ProjLine, l2: ProjLine, m: ProjLine,
                 candidates: Sequence[ProjPlane] = ()) -> tuple[ProjPlane, tuple]:
    """A rational plane through ``m`` containing neither ``l1`` nor ``l2``.

    Explicit candidates are tried first (those not containing ``m`` are
    skipped), then a fixed scan of the pencil through ``m``, then a seeded
    enumeration of that pencil.
    """
    def ok(H):
        return H.contains(m) and not H.contains(l1) and not H.contains(l2)

    for H in candidates:
        if ok(H):
            return H, _chart_with_line(H, m)
    h1, h2 = _planes_through(m)

    def combo(a, b):
        return ProjPlane([a * x + b * y for x, y in zip(h1.coeffs, h2.coeffs)])

    for a, b in _PENCIL_CANDIDATES:
        H = combo(a, b)
        if ok(H):
            return H, _chart_with_line(H, m)
    rng = random.Random(0)
    while True:  # only finitely many planes of the pencil can fail
        H = combo(rng.randint(-99, 99), rng.randint(1, 99))
        if ok(H):
            return H, _chart_with_line(H, m)


def generic_plane(l1: ProjLine, l2: ProjLine, seed: int = 0) -> ProjPlane:
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randint(-9, 9) for _ in range(4)]
        if not any(coeffs):
            continue
        H = ProjPlane(coeffs)
        if not H.contains(l1) and not H.contains(l2):
            return H


# -----------------------------------------------------------------------------
# the engine

def _normalize_forms(forms: Sequence[MPoly], chart_var: str = "y0") -> tuple[MPoly, ...]:
    """Divide out the common factor and fix the unit.

    The unit is chosen so that the first nonzero form, dehomogenized in
    ``chart_var``, has graded-lex leading coefficient 1.
    """
    g = gcd_many(forms)
    if not g.is_constant():
        forms = [f / g for f in forms]
    lead = next(f for f in forms if not f.is_zero())
    lc = lead.dehomogenize(chart_var).lc() if chart_var in lead.vars else lead.lc()
    forms = [f / lc for f in forms]
    if all(f.is_rational() for f in forms):
        forms = [f.demote() for f in forms]
    return tuple(forms), g


def third_point(S: CubicSurface, p1: Sequence, p2: Sequence) -> tuple:
    """Third intersection of the line ``span{p1, p2}`` with ``S``, both ``p_i`` on S."""
    line = ProjLine(p1, p2)
    F = restrict_to_line(S, line)
    try:
        F = exact_divide_binary(F, linear_form(0, 1))  # v: vanishes at p1 = (1:0)
    except NotARoot:
        raise InputNotOnSurface("marked point on l1 is not on the surface") from None
    try:
        F = exact_divide_binary(F, linear_form(1, 0))  # u: vanishes at p2 = (0:1)
    except NotARoot:
        raise InputNotOnSurface("marked point on l2 is not on the surface") from None
    u, v = root_of_linear(F)
    return tuple(u * a + v * b for a, b in zip(line.A, line.B)), F


@dataclass
class ParamResult:
    phi: tuple[MPoly, ...]
    degree: int
    chart: tuple[ProjPoint, ProjPoint, ProjPoint]
    plane: ProjPlane
    surface: CubicSurface
    l1: ProjLine
    l2: ProjLine
    m: ProjLine | None = None
    gcd_removed: MPoly | None = None
    field: str = "Q"
    kind: str = "rational"
    verification: dict = dc_field(default_factory=dict)

    def __call__(self, y: Sequence) -> ProjPoint:
        vals = [f.evaluate(y) for f in self.phi]
        return ProjPoint(vals)

    def affine(self) -> tuple[RatFn, RatFn, RatFn]:
        """``x_i = phi_i / phi_0`` in the chart ``y0 = 1``, as reduced functions of (y1, y2)."""
        den = self.phi[0].dehomogenize("y0")
        return tuple(RatFn(f.dehomogenize("y0"), den) for f in self.phi[1:])

    def chart_point(self, y: Sequence) -> ProjPoint:
        A, B, C = self.chart
        return ProjPoint([y[0] * a + y[1] * b + y[2] * c for a, b, c in zip(A, B, C)])


def _symbolic_chart_point(chart) -> tuple[MPoly, ...]:
    y0, y1, y2 = MPoly.gens(*YVARS)
    A, B, C = chart
    return tuple(y0 * a + y1 * b + y2 * c for a, b, c in zip(A, B, C))


def resolve_chart(inp: ParamInput) -> tuple[ProjPlane, tuple]:
    l1, l2, m = inp.l1, inp.l2, inp.m
    if inp.chart is not None:
        chart = tuple(p if isinstance(p, ProjPoint) else ProjPoint(p) for p in inp.chart)
        H = plane_through_points(*chart)
        if inp.plane is not None and not H == inp.plane:
            raise InputError("chart points do not span the given plane")
    elif inp.plane is not None:
        H = inp.plane
        chart = chart_for_plane(H, m)
    elif m is not None:
        H, chart = choose_plane(l1, l2, m)
    else:
        H = generic_plane(l1, l2)
        chart = chart_for_plane(H)
    if H.contains(l1) or H.contains(l2):
        raise InputError("plane contains l1 or l2")
    return H, chart


def parametrize(inp: ParamInput, check: bool = True) -> ParamResult:
    """Build the parametrization; with ``check`` the result is verified and a
    :class:`VerificationFailed` is raised if any check fails."""
    kind = validate_input(inp)
    S = inp.surface
    H, chart = resolve_chart(inp)
    x = _symbolic_chart_point(chart)
    try:
        tr = transversal(x, inp.l1, inp.l2)
    except DegenerateTransversal as exc:
        raise DegenerateChart(f"transversal undefined on the whole chart: {exc}") from None
    q, _ = third_point(S, tr.on_l1.coords, tr.on_l2.coords)
    if all(c.is_zero() for c in q):
        raise DegenerateChart("third intersection point vanishes identically")
    phi, g = _normalize_forms(q)
    degrees = {f.total_degree() for f in phi if not f.is_zero()}
    degree = max(degrees)
    fld = "Q" if all(f.is_rational() for f in phi) else "Q(w)"
    result = ParamResult(phi=phi, degree=degree, chart=chart, plane=H, surface=S,
                         l1=inp.l1, l2=inp.l2, m=inp.m, gcd_removed=g,
                         field=fld, kind=kind)
    if check:
        report = verify(result, S)
        result.verification = report
        if not report["ok"]:
            raise VerificationFailed(report["failed"], report)
    return result


# -----------------------------------------------------------------------------
# factor maps

def phi1(x, inp: ParamInput) -> tuple[ProjPoint, ProjPoint]:
    """The points where the transversal through ``x`` meets ``l1`` and ``l2``."""
    tr = transversal(x, inp.l1, inp.l2)
    return tr.on_l1, tr.on_l2


@dataclass
class BiquadResult:
    phi2: tuple[MPoly, ...]
    l1: ProjLine
    l2: ProjLine
    gcd_removed: MPoly | None = None

    def bidegree(self) -> tuple[int, int]:
        du = max(sum(e[:2]) for f in self.phi2 for e in f.terms)
        dv = max(sum(e[2:]) for f in self.phi2 for e in f.terms)
        return du, dv

    def __call__(self, u: Sequence, v: Sequence) -> ProjPoint:
        vals = [f.evaluate((u[0], u[1], v[0], v[1])) for f in self.phi2]
        if not any(vals):
            raise DegenerateTransversal(
                "base point: the chord lies on the surface")
        return ProjPoint(vals)

    def at_points(self, a: ProjPoint, b: ProjPoint) -> ProjPoint:
        """Evaluate at a point of ``l1`` and a point of ``l2``."""
        return self(line_coordinates(a, self.l1), line_coordinates(b, self.l2))


def biquadratic(inp: ParamInput) -> BiquadResult:
    """The map ``l1 x l2 -> S`` sending a pair of points to the third point of their chord."""
    kind = validate_input(inp)
    if kind != "rational":
        raise NotDefinedOverBase("the biquadratic map needs two rational lines")
    u0, u1, v0, v1 = MPoly.gens(*UVVARS)
    a = tuple(u0 * p + u1 * r for p, r in zip(inp.l1.A, inp.l1.B))
    b = tuple(v0 * p + v1 * r for p, r in zip(inp.l2.A, inp.l2.B))
    q, _ = third_point(inp.surface, a, b)
    g = gcd_many(q)
    if not g.is_constant():
        q = [f / g for f in q]
    lead = next(f for f in q if not f.is_zero())
    q = tuple((f / lead.lc()).demote() for f in q)
    return BiquadResult(q, inp.l1, inp.l2, g)


# -----------------------------------------------------------------------------
# verification

def _substitute_into(S: CubicSurface, forms: Sequence[MPoly]) -> MPoly:
    return S.form.substitute(dict(zip(XVARS, forms)))


def predicted_degree(S: CubicSurface, l1: ProjLine, l2: ProjLine, H: ProjPlane) -> int:
    """3 if ``H`` contains a line of S meeting l1 and l2, else the generic degree.

    Such a line must pass through ``l1 ∩ H`` and ``l2 ∩ H``, so it is the line
    joining those two points.
    """
    P = intersect_line_plane(l1, H)
    Q = intersect_line_plane(l2, H)
    return (DEGREE_WITH_TRANSVERSAL if contains_line(S, ProjLine(P, Q))
            else DEGREE_GENERIC)


def _projective_key(vals: Sequence) -> tuple:
    k = next(i for i, c in enumerate(vals) if c)
    return tuple(c / vals[k] for c in vals)


def verify(result: ParamResult, S: CubicSurface | None = None,
           samples: int = 25, seed: int = 7) -> dict:
    """Machine-check a parametrization.  Returns a report with one entry per check."""
    S = S or result.surface
    phi = result.phi
    checks: dict = {}

    residual = _substitute_into(S, phi)
    checks["identity"] = {"ok": residual.is_zero(),
                          "detail": "f(phi) == 0" if residual.is_zero()
                          else f"{len(residual.terms)} nonzero terms"}

    nonzero = [f for f in phi if not f.is_zero()]
    g = gcd_many(nonzero)
    checks["gcd_unit"] = {"ok": g.is_constant(), "detail": str(g)}

    degs = {f.total_degree() for f in nonzero}
    homog = all(f.is_homogeneous() for f in nonzero) and len(degs) == 1
    deg = max(degs)
    if result.l1 is not None and result.l2 is not None and result.plane is not None:
        pred = predicted_degree(S, result.l1, result.l2, result.plane)
    else:
        pred = None
    deg_ok = homog and (deg == pred if pred is not None
                        else deg in (DEGREE_WITH_TRANSVERSAL, DEGREE_GENERIC))
    checks["degree"] = {"ok": deg_ok, "degree": deg, "predicted": pred}

    fld = "Q" if all(f.is_rational() for f in phi) else "Q(w)"
    want_rational = result.kind in ("rational", "conjugate")
    checks["field"] = {"ok": fld == "Q" or not want_rational, "field": fld}

    rng = random.Random(seed)
    images = set()
    tries = 0
    while len(images) < samples and tries < 10 * samples:
        tries += 1
        y = [Fraction(rng.randint(-30, 30), rng.randint(1, 7)) for _ in range(3)]
        vals = [f.evaluate(y) for f in phi]
        if not any(vals):
            continue
        key = _projective_key(vals)
        if key in images:
            break
        images.add(key)
    checks["injective_sample"] = {"ok": len(images) == samples, "distinct": len(images)}

    failed = [k for k, v in checks.items() if not v["ok"]]
    return {"ok": not failed, "failed": failed, "checks": checks}


# -----------------------------------------------------------------------------
# restriction to lines of the chart

def restrict_to_chart_line(result: ParamResult, line: ProjLine) -> tuple[MPoly, ...]:
    """``phi`` along a line of ``H``, as binary forms in (s, t)."""
    A, B, C = result.chart
    cols = [A.coords, B.coords, C.coords]

    def chart_coords(pt):
        # solve y0*A + y1*B + y2*C = pt
        rows = [[cols[0][i], cols[1][i], cols[2][i], -pt[i]] for i in range(4)]
        (sol,) = kernel(rows, 4)
        return [c / sol[3] for c in sol[:3]]

    ya = chart_coords(line.A.coords)
    yb = chart_coords(line.B.coords)
    s, t = MPoly.gens("s", "t")
    bind = {v: s * a + t * b for v, a, b in zip(YVARS, ya, yb)}
    return tuple(f.substitute(bind) for f in result.phi)


def is_constant_map(forms: Sequence[MPoly]) -> bool:
    """True when the forms are proportional, i.e. define a constant point."""
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        return False
    ref = nonzero[0]
    lead, lc = ref.leading_term()
    return all((f * lc - ref * f.coeff(lead)).is_zero() for f in forms)
