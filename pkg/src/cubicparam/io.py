"""Problem files, parametrization files and CSV samples.

A problem file is JSON::

    {
      "field": [1, 1, 1],                 # optional: x^2 + x + 1, generator "w"
      "surface": "x0^3 + x1^3 + x2^3 + x3^3",
      "lines": {
        "l1": [["1", "-w^2", "0", "0"], ["0", "0", "-w", "1"]],
        "l2": {"affine": {"base": ["-w", "0", "0"], "direction": ["0", "-w^2", "1"]}},
        "m":  [[1, 0, -1, 0], [0, -1, 0, 1]]
      },
      "plane": "x0 + x2",                 # optional linear form
      "chart": [[1, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],   # optional
      "primes": [7, 13]                   # optional
    }

Point entries are integers or strings in the expression grammar.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Sequence

from .errors import InputError
from .parametrizer import YVARS, ParamInput, ParamResult
from .parser import parse_expr, parse_scalar
from .polynomials import MPoly, RatFn, render
from .projgeom import ProjLine, ProjPlane, ProjPoint, line_from_affine
from .scalars import MinPoly, format_scalar
from .surface import XVARS, CubicSurface

PARAM_FORMAT = "cubicparam/param-result/1"


@dataclass
class ProblemFile:
    surface: CubicSurface | None
    lines: dict[str, ProjLine]
    field: MinPoly | None = None
    plane: ProjPlane | None = None
    chart: tuple[ProjPoint, ProjPoint, ProjPoint] | None = None
    primes: list[int] = dc_field(default_factory=list)
    raw: dict = dc_field(default_factory=dict, repr=False)

    def line(self, name: str) -> ProjLine:
        try:
            return self.lines[name]
        except KeyError:
            raise InputError(f"problem file has no line {name!r}") from None

    def param_input(self, plane: ProjPlane | None = None) -> ParamInput:
        if self.surface is None:
            raise InputError("problem file has no surface")
        chart = self.chart if plane is None else None
        return ParamInput(self.surface, self.line("l1"), self.line("l2"),
                          self.lines.get("m"), plane or self.plane, chart)


def parse_field(spec) -> MinPoly | None:
    if spec is None:
        return None
    if not isinstance(spec, Sequence) or len(spec) != 3 or spec[0] != 1:
        raise InputError("field must be [1, b, c] for x^2 + b*x + c")
    return MinPoly.from_coeffs([int(c) for c in spec])


def field_to_json(mp: MinPoly | None):
    return None if mp is None else [int(c) for c in mp.to_coeffs()]


def parse_point(entries: Sequence, fld: MinPoly | None = None) -> ProjPoint:
    if len(entries) != 4:
        raise InputError("a point needs 4 homogeneous coordinates")
    return ProjPoint([parse_scalar(e, fld) for e in entries])


def parse_line(spec, fld: MinPoly | None = None) -> ProjLine:
    if isinstance(spec, Mapping):
        if "affine" in spec:
            aff = spec["affine"]
            base = [parse_scalar(e, fld) for e in aff["base"]]
            direction = [parse_scalar(e, fld) for e in aff["direction"]]
            return line_from_affine(base, direction)
        spec = spec["points"]
    if len(spec) != 2:
        raise InputError("a line is given by two points")
    return ProjLine(parse_point(spec[0], fld), parse_point(spec[1], fld))


def parse_plane(spec, fld: MinPoly | None = None) -> ProjPlane:
    """A plane from a linear form string such as ``"x0 + x2"`` or 4 coefficients."""
    if isinstance(spec, str):
        form = parse_expr(spec, XVARS, fld)
        if not form.is_homogeneous() or form.total_degree() != 1:
            raise InputError("plane must be a homogeneous linear form")
        return ProjPlane([form.coeff(tuple(int(i == j) for j in range(4))) for i in range(4)])
    return ProjPlane([parse_scalar(c, fld) for c in spec])


def load_problem(source) -> ProblemFile:
    """Read a problem file from a path or an already decoded mapping."""
    if isinstance(source, Mapping):
        data = dict(source)
    else:
        with open(source, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InputError(f"invalid JSON: {exc}") from None
    fld = parse_field(data.get("field"))
    surface = None
    if data.get("surface") is not None:
        surface = CubicSurface(parse_expr(data["surface"], XVARS, fld))
    lines = {name: parse_line(spec, fld) for name, spec in data.get("lines", {}).items()}
    plane = parse_plane(data["plane"], fld) if data.get("plane") is not None else None
    chart = None
    if data.get("chart") is not None:
        pts = data["chart"]
        if len(pts) != 3:
            raise InputError("chart needs three points")
        chart = tuple(parse_point(p, fld) for p in pts)
    primes = [int(p) for p in data.get("primes", [])]
    return ProblemFile(surface, lines, fld, plane, chart, primes, data)


# -----------------------------------------------------------------------------
# rendering helpers

def point_to_json(pt: ProjPoint) -> list[str]:
    return [format_scalar(c) for c in pt.coords]


def line_to_json(line: ProjLine) -> list[list[str]]:
    return [point_to_json(line.A), point_to_json(line.B)]


def plane_to_text(H: ProjPlane) -> str:
    return render(MPoly.linear_form(H.coeffs, XVARS))


def ratfn_to_json(r: RatFn) -> dict:
    return {"num": render(r.num), "den": render(r.den)}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    return str(obj)


def result_to_dict(result: ParamResult, fld: MinPoly | None = None) -> dict:
    affine = result.affine()
    lines = {"l1": line_to_json(result.l1), "l2": line_to_json(result.l2)}
    if result.m is not None:
        lines["m"] = line_to_json(result.m)
    g = result.gcd_removed
    return {
        "format": PARAM_FORMAT,
        "field": field_to_json(fld),
        "variables": list(YVARS),
        "phi": [render(f) for f in result.phi],
        "degree": result.degree,
        "field_of_definition": result.field,
        "kind": result.kind,
        "surface": render(result.surface.form),
        "plane": plane_to_text(result.plane),
        "chart": [point_to_json(p) for p in result.chart],
        "lines": lines,
        "gcd_removed": None if g is None else render(g),
        "affine": {"chart": "y0 = 1", "x1": ratfn_to_json(affine[0]),
                   "x2": ratfn_to_json(affine[1]), "x3": ratfn_to_json(affine[2])},
        "verification": _jsonable(result.verification),
    }


def result_from_dict(data: Mapping, surface: CubicSurface | None = None) -> ParamResult:
    fld = parse_field(data.get("field"))
    phi = tuple(parse_expr(s, YVARS, fld) for s in data["phi"])
    if len(phi) != 4:
        raise InputError("a parametrization needs 4 forms")
    if surface is None:
        surface = CubicSurface(parse_expr(data["surface"], XVARS, fld))
    lines = {k: parse_line(v, fld) for k, v in data.get("lines", {}).items()}
    chart = tuple(parse_point(p, fld) for p in data["chart"])
    degrees = {f.total_degree() for f in phi if not f.is_zero()}
    g = data.get("gcd_removed")
    return ParamResult(
        phi=phi, degree=max(degrees) if degrees else 0, chart=chart,
        plane=parse_plane(data["plane"], fld), surface=surface,
        l1=lines.get("l1"), l2=lines.get("l2"), m=lines.get("m"),
        gcd_removed=parse_expr(g, YVARS, fld) if g else None,
        field=data.get("field_of_definition", "Q"), kind=data.get("kind", "rational"))


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


# -----------------------------------------------------------------------------
# sampling

def grid_values(n: int) -> list[Fraction]:
    """``n`` consecutive integers around 0, always including 0."""
    lo = -((n - 1) // 2)
    return [Fraction(lo + i) for i in range(n)]


def sample_grid(result: ParamResult, n: int) -> list[dict]:
    """Evaluate the affine map on an ``n x n`` grid of (y1, y2).

    Points where the chart denominator vanishes are skipped.  Each point is
    checked on the surface exactly before it is returned.
    """
    f = result.surface.form
    rows = []
    for a in grid_values(n):
        for b in grid_values(n):
            y = (Fraction(1), a, b)
            vals = [p.evaluate(y) for p in result.phi]
            if not vals[0]:
                continue
            x = [v / vals[0] for v in vals[1:]]
            if f.evaluate([Fraction(1), *x]):
                raise InputError(f"sample at y=({a}, {b}) is not on the surface")
            rows.append({"y1": a, "y2": b, "x1": x[0], "x2": x[1], "x3": x[2]})
    return rows


CSV_COLUMNS = ["y1", "y2", "x1", "x2", "x3", "x1_float", "x2_float", "x3_float"]


def _float_text(x) -> str:
    return repr(float(Fraction(x)))


def write_samples_csv(rows: Sequence[dict], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        vals = [r["y1"], r["y2"], r["x1"], r["x2"], r["x3"]]
        floats = [_float_text(r[k]) for k in ("x1", "x2", "x3")]
        w.writerow([format_scalar(v) for v in vals] + floats)
