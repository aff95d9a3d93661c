import random
from fractions import Fraction
from itertools import combinations

import pytest

from cubicparam.errors import BadPrime, BadReduction, NonSplitPrime, NoGoodPrime
from cubicparam.fforacle import (FpLine, all_lines, count_transversals, enumerate_lines,
                                 good_primes, oracle_report, reduce_line, reduce_mod_p,
                                 reduce_scalar, screen_singular_points, split_roots)
from cubicparam.parametrizer import ParamInput, parametrize
from cubicparam.parser import parse_expr
from cubicparam.projgeom import line_from_affine
from cubicparam.scalars import OMEGA
from cubicparam.surface import XVARS, CubicSurface

W = OMEGA.gen
FERMAT = CubicSurface(parse_expr("x0^3 + x1^3 + x2^3 + x3^3", XVARS))
L1 = line_from_affine([-W ** 2, 0, 0], [0, -W, 1])
L2 = line_from_affine([-W, 0, 0], [0, -W ** 2, 1])
M = line_from_affine([0, -1, 0], [-1, 0, 1])


def test_scalar_reduction():
    assert reduce_scalar(Fraction(1, 2), 7) == 4
    assert split_roots(OMEGA, 7) == [2, 4]
    assert reduce_scalar(W, 7, 4) == 4
    with pytest.raises(BadPrime):
        reduce_scalar(Fraction(1, 7), 7)


def test_fermat_reduction():
    f = reduce_mod_p(FERMAT, 7)
    assert f.terms == {(3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 3, 0): 1, (0, 0, 0, 3): 1}


def test_non_split_prime():
    with pytest.raises(NonSplitPrime):
        reduce_line(L1, 5)


def test_line_count_of_projective_space():
    p = 3
    lines = list(all_lines(p))
    # Gaussian binomial [4 choose 2]_p
    assert len(lines) == (p ** 2 + 1) * (p ** 2 + p + 1)
    assert len(set(lines)) == len(lines)


@pytest.mark.parametrize("p", [7, 13])
def test_fermat_27_lines(p):
    found = enumerate_lines(reduce_mod_p(FERMAT, p))
    assert len(found) == 27
    f = reduce_mod_p(FERMAT, p)
    for l in found:
        a, b = l.rows
        for s in range(p):
            assert f([(s * x + y) % p for x, y in zip(a, b)]) == 0
    # no two representatives span the same line
    for l, k in combinations(found, 2):
        assert l.plucker != k.plucker


def test_fermat_mod_5_line_count():
    # only the lines defined over F_5; value fixed by enumeration
    assert len(enumerate_lines(reduce_mod_p(FERMAT, 5))) == 3


def test_every_skew_pair_has_five_transversals():
    found = enumerate_lines(reduce_mod_p(FERMAT, 7))
    skew = [(a, b) for a, b in combinations(found, 2) if not a.meets(b)]
    assert len(skew) == 27 * 16 // 2
    assert {count_transversals(a, b, found) for a, b in skew} == {5}


def test_report_for_printed_lines():
    rep = oracle_report(FERMAT, {"l1": L1, "l2": L2, "m": M}, 7)
    assert rep["lines"] == 27
    assert rep["transversals"] == {"l1,l2": 5}
    assert all(rep["lines_on_surface"].values())


def test_equal_lines_rejected():
    l = reduce_line(M, 7)
    with pytest.raises(BadReduction):
        count_transversals(l, l, [])


def test_cone_has_too_many_lines():
    cone = CubicSurface(parse_expr("x0*x1*x2"))
    assert len(enumerate_lines(reduce_mod_p(cone, 7))) > 27


def test_good_primes_and_screen():
    assert good_primes(FERMAT, minpoly=OMEGA) == [7, 13, 19]
    rep = screen_singular_points(FERMAT, [2, 7])
    assert rep["results"][0]["status"] == "bad prime"
    assert not rep["singular"]
    with pytest.raises(NoGoodPrime):
        screen_singular_points(FERMAT, [3, 4])
    cayley = CubicSurface(parse_expr("x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3"))
    assert screen_singular_points(cayley, [7])["singular"]


def test_parametrization_reduces_onto_surface():
    res = parametrize(ParamInput(FERMAT, L1, L2, M))
    p = 13
    f = reduce_mod_p(FERMAT, p)
    from cubicparam.fforacle import reduce_mpoly
    phi = [reduce_mpoly(g, p) for g in res.phi]
    rng = random.Random(0)
    for _ in range(50):
        y = [rng.randrange(p) for _ in range(3)]
        assert f([g(y) for g in phi]) == 0


def test_fpline_span_is_canonical():
    a = FpLine.span([1, 2, 3, 4], [0, 1, 1, 1], 7)
    b = FpLine.span([1, 3, 4, 5], [2, 4, 6, 1], 7)
    assert a == b
