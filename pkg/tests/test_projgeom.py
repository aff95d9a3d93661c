import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from cubicparam.errors import DegenerateLine, DegenerateTransversal, SamePlane
from cubicparam.linalg import det3, echelon, kernel, rank
from cubicparam.polynomials import MPoly
from cubicparam.projgeom import (ProjLine, ProjPlane, ProjPoint, intersect_line_plane,
                                 line_coordinates, line_from_affine, lines_meet, meet_planes,
                                 plane_through, plucker_quadric, standard_point, transversal)
from cubicparam.scalars import OMEGA

W = OMEGA.gen
coord = st.integers(-6, 6)
pts = st.tuples(coord, coord, coord, coord).filter(any)


def test_plucker_quadric_vanishes():
    l = ProjLine([1, 2, 3, 4], [0, 1, -1, 5])
    assert plucker_quadric(l.plucker) == 0


def test_degenerate_line():
    with pytest.raises(DegenerateLine):
        ProjLine([1, 2, 3, 4], [2, 4, 6, 8])


def test_meeting_and_skew():
    e = [standard_point(i) for i in range(4)]
    a, b, c = ProjLine(e[0], e[1]), ProjLine(e[2], e[3]), ProjLine(e[1], e[2])
    assert not lines_meet(a, b)
    assert lines_meet(a, c) and lines_meet(b, c)


@given(pts, pts, pts, pts)
def test_lines_meet_iff_coplanar(p, q, r, s):
    try:
        l1, l2 = ProjLine(p, q), ProjLine(r, s)
    except DegenerateLine:
        return
    det = sympy.Matrix([p, q, r, s]).det()
    assert lines_meet(l1, l2) == (det == 0)


def test_transversal_symmetric_configuration():
    l1 = ProjLine(standard_point(0), standard_point(1))
    l2 = ProjLine(standard_point(2), standard_point(3))
    t = transversal(ProjPoint([1, 1, 1, 1]), l1, l2)
    assert t.on_l1.same_as(ProjPoint([1, 1, 0, 0]))
    assert t.on_l2.same_as(ProjPoint([0, 0, 1, 1]))


@given(pts)
def test_transversal_properties(x):
    l1 = ProjLine([1, 2, 0, -1], [0, 1, 3, 1])
    l2 = ProjLine([2, 0, 1, 1], [1, -1, 0, 4])
    assert not lines_meet(l1, l2)
    try:
        t = transversal(x, l1, l2)
    except DegenerateTransversal:
        return
    assert t.line.contains_point(x)
    assert l1.contains_point(t.on_l1) and l2.contains_point(t.on_l2)
    assert lines_meet(t.line, l1) and lines_meet(t.line, l2)


def test_transversal_with_symbolic_point():
    y0, y1, y2 = MPoly.gens("y0", "y1", "y2")
    l1 = ProjLine([1, 0, 0, 0], [0, 1, 0, 0])
    l2 = ProjLine([0, 0, 1, 0], [0, 0, 0, 1])
    x = (y0, y1, y2, y0 + y1 + y2)
    t = transversal(x, l1, l2)
    val = {"y0": 2, "y1": -1, "y2": 5}
    num = transversal([2, -1, 5, 6], l1, l2)
    sym = ProjPoint([c.evaluate([val[v] for v in c.vars]) for c in t.on_l1.coords])
    assert sym.same_as(num.on_l1)


def test_transversal_point_on_line():
    l1 = ProjLine(standard_point(0), standard_point(1))
    l2 = ProjLine(standard_point(2), standard_point(3))
    with pytest.raises(DegenerateTransversal):
        transversal(standard_point(0), l1, l2)


def test_planes_and_intersections():
    H = plane_through([0, 0, 1, 0], ProjLine(standard_point(0), standard_point(1)))
    assert H == ProjPlane([0, 0, 0, 1])
    l = meet_planes(ProjPlane([1, 0, 0, 0]), ProjPlane([0, 1, 0, 0]))
    assert l.same_as(ProjLine(standard_point(2), standard_point(3)))
    with pytest.raises(SamePlane):
        meet_planes(ProjPlane([1, 1, 0, 0]), ProjPlane([2, 2, 0, 0]))
    p = intersect_line_plane(ProjLine([1, 0, 0, 0], [0, 1, 1, 1]), ProjPlane([1, -1, 0, 0]))
    assert ProjPoint(p).same_as(ProjPoint([1, 1, 1, 1]))


def test_line_coordinates():
    l = ProjLine([1, 2, 3, 4], [0, 1, 0, 1])
    u, v = line_coordinates(l.point(3, -2), l)
    assert (u, v) == (3, -2)


def test_conjugate_lines_and_rationality():
    l1 = line_from_affine([-W ** 2, 0, 0], [0, -W, 1])
    l2 = line_from_affine([-W, 0, 0], [0, -W ** 2, 1])
    assert not l1.is_rational()
    assert l1.conjugate().same_as(l2)
    assert ProjLine([2, 4, 0, 0], [0, 0, 6, 2]).is_rational()
    assert ProjLine([W, W, 0, 0], [0, 0, 1, 1]).is_rational()


def test_linalg_against_sympy():
    rng = random.Random(5)
    for _ in range(20):
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(6)] for _ in range(4)]
        rows.append([a + b for a, b in zip(rows[0], rows[1])])
        assert rank(rows) == sympy.Matrix(rows).rank()
        for v in kernel(rows, 6):
            assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
        assert len(kernel(rows, 6)) == 6 - rank(rows)
    m = [[2, 0, 1], [1, 3, 2], [1, 1, 1]]
    assert det3(m) == sympy.Matrix(m).det()
    E, piv = echelon([[0, 1], [1, 0]])
    assert piv == [0, 1]
