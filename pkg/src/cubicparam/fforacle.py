"""Brute-force computations over small prime fields.

Surfaces and lines are reduced modulo p (sending the extension generator to
a chosen root of its minimal polynomial when that polynomial splits), after
which every line of P^3(F_p) can be tested for containment.  This gives an
oracle for line counts and transversal counts that shares no code path with
the characteristic-zero engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .errors import BadPrime, BadReduction, NoGoodPrime, NonSplitPrime
from .polynomials import MPoly
from .projgeom import PLUCKER_INDEX, ProjLine
from .scalars import MinPoly, QuadExt

MAX_PRIME = 31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, int(n ** 0.5) + 1))


def _frac_mod(x: Fraction, p: int) -> int:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise BadPrime(f"{p} divides the denominator of {x}")
    return x.numerator * pow(x.denominator, -1, p) % p


def split_roots(minpoly: MinPoly, p: int) -> list[int]:
    """Roots of ``x^2 - P*x - Q`` in F_p, ascending."""
    P, Q = _frac_mod(minpoly.p, p), _frac_mod(minpoly.q, p)
    return [r for r in range(p) if (r * r - P * r - Q) % p == 0]


def reduce_scalar(c, p: int, root: int | None = None) -> int:
    if isinstance(c, QuadExt):
        if not c.ext:
            return _frac_mod(c.base, p)
        if root is None:
            raise NonSplitPrime("no embedding of the extension given")
        return (_frac_mod(c.base, p) + _frac_mod(c.ext, p) * root) % p
    return _frac_mod(c, p)


def _minpoly_of(coeffs: Iterable) -> MinPoly | None:
    for c in coeffs:
        if isinstance(c, QuadExt) and c.ext:
            return c.ctx
    return None


def choose_root(minpoly: MinPoly | None, p: int, root: int | None = None) -> int | None:
    if minpoly is None:
        return root
    roots = split_roots(minpoly, p)
    if not roots:
        raise NonSplitPrime(f"minimal polynomial does not split mod {p}")
    if root is None:
        return roots[0]
    if root % p not in roots:
        raise BadPrime(f"{root} is not a root of the minimal polynomial mod {p}")
    return root % p


@dataclass
class FpForm:
    """A polynomial with coefficients in F_p."""

    p: int
    vars: tuple
    terms: dict

    def __call__(self, x: Sequence[int]) -> int:
        p = self.p
        total = 0
        for e, c in self.terms.items():
            t = c
            for xi, k in zip(x, e):
                if k:
                    t = t * pow(xi, k, p)
            total += t
        return total % p

    def is_zero(self) -> bool:
        return not self.terms

    def diff(self, i: int) -> "FpForm":
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                v = c * e[i] % self.p
                if v:
                    terms[tuple(ne)] = v
        return FpForm(self.p, self.vars, terms)

    def table(self) -> np.ndarray:
        """Values on all of F_p^n as a flat array indexed in base p."""
        p, n = self.p, len(self.vars)
        grids = np.indices((p,) * n, dtype=np.int64).reshape(n, -1)
        out = np.zeros(grids.shape[1], dtype=np.int64)
        for e, c in self.terms.items():
            t = np.full(grids.shape[1], c, dtype=np.int64)
            for i, k in enumerate(e):
                if k:
                    t = t * (grids[i] ** k % p) % p
            out = (out + t) % p
        return out


def reduce_mpoly(form: MPoly, p: int, root: int | None = None) -> FpForm:
    if not is_prime(p):
        raise BadPrime(f"{p} is not prime")
    root = choose_root(_minpoly_of(form.terms.values()), p, root)
    terms = {}
    for e, c in form.terms.items():
        v = reduce_scalar(c, p, root)
        if v:
            terms[e] = v
    return FpForm(p, form.vars, terms)


def reduce_mod_p(S, p: int, root: int | None = None) -> FpForm:
    """Reduce a cubic surface (or its form) coefficientwise modulo ``p``."""
    form = S.form if hasattr(S, "form") else S
    if p > MAX_PRIME:
        raise BadPrime(f"primes above {MAX_PRIME} are not supported")
    red = reduce_mpoly(form, p, root)
    if red.is_zero():
        raise BadPrime(f"form vanishes mod {p}")
    return red


# -----------------------------------------------------------------------------
# lines over F_p

def _rref2(r1: Sequence[int], r2: Sequence[int], p: int) -> tuple:
    rows = [list(r1), list(r2)]
    col = 0
    for r in range(2):
        while col < 4:
            piv = next((i for i in range(r, 2) if rows[i][col] % p), None)
            if piv is not None:
                break
            col += 1
        if col == 4:
            raise BadReduction("spanning points are dependent mod p")
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(2):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        col += 1
    return tuple(rows[0]), tuple(rows[1])


@dataclass(frozen=True, order=True)
class FpLine:
    """A line of P^3(F_p) in reduced row echelon form (a canonical representative)."""

    rows: tuple
    p: int = field(compare=False)

    @classmethod
    def span(cls, a: Sequence[int], b: Sequence[int], p: int) -> "FpLine":
        return cls(_rref2([x % p for x in a], [x % p for x in b], p), p)

    @property
    def plucker(self) -> tuple:
        A, B = self.rows
        return tuple((A[i] * B[j] - A[j] * B[i]) % self.p for i, j in PLUCKER_INDEX)

    def meets(self, other: "FpLine") -> bool:
        p01, p02, p03, p12, p13, p23 = self.plucker
        q01, q02, q03, q12, q13, q23 = other.plucker
        s = (p01 * q23 - p02 * q13 + p03 * q12 + p23 * q01 - p13 * q02 + p12 * q03)
        return s % self.p == 0

    def in_plane(self, h: Sequence[int]) -> bool:
        return all(sum(a * b for a, b in zip(h, r)) % self.p == 0 for r in self.rows)


def reduce_line(line: ProjLine, p: int, root: int | None = None) -> FpLine:
    coords = list(line.A) + list(line.B)
    root = choose_root(_minpoly_of(coords), p, root)
    a = [reduce_scalar(c, p, root) for c in line.A]
    b = [reduce_scalar(c, p, root) for c in line.B]
    return FpLine.span(a, b, p)


def all_lines(p: int):
    """Every line of P^3(F_p), each once, as RREF row pairs."""
    for i, j in combinations(range(4), 2):
        free1 = [c for c in range(i + 1, 4) if c != j]
        free2 = [c for c in range(j + 1, 4)]
        for v1 in product(range(p), repeat=len(free1)):
            r1 = [0, 0, 0, 0]
            r1[i] = 1
            for c, x in zip(free1, v1):
                r1[c] = x
            for v2 in product(range(p), repeat=len(free2)):
                r2 = [0, 0, 0, 0]
                r2[j] = 1
                for c, x in zip(free2, v2):
                    r2[c] = x
                yield tuple(r1), tuple(r2)


def _binary_restriction_zero(f: FpForm, a, b) -> bool:
    p = f.p
    if f(a) or f(b):
        return False
    grads = [f.diff(i) for i in range(4)]
    ga = [g(a) for g in grads]
    gb = [g(b) for g in grads]
    return (sum(x * y for x, y in zip(ga, b)) % p == 0
            and sum(x * y for x, y in zip(gb, a)) % p == 0)


def enumerate_lines(f: FpForm) -> list[FpLine]:
    """All lines of P^3(F_p) on which the cubic ``f`` vanishes identically."""
    p = f.p
    tab = f.table()
    weights = (p ** 3, p ** 2, p, 1)

    def idx(v):
        return sum((x % p) * w for x, w in zip(v, weights))

    found = []
    for r1, r2 in all_lines(p):
        if tab[idx(r1)] or tab[idx(r2)]:
            continue
        s = [a + b for a, b in zip(r1, r2)]
        if tab[idx(s)]:
            continue
        d = [a - b for a, b in zip(r1, r2)]
        if tab[idx(d)]:
            continue
        # four distinct points of P^1 force a binary cubic to vanish when p > 2
        if p == 2 and not _binary_restriction_zero(f, r1, r2):
            continue
        found.append(FpLine((r1, r2), p))
    found.sort()
    return found


def count_transversals(l1: FpLine, l2: FpLine, lines: Sequence[FpLine]) -> int:
    if l1.rows == l2.rows:
        raise BadReduction("l1 and l2 coincide")
    if l1.meets(l2):
        raise BadReduction("l1 and l2 are not skew mod p")
    return sum(1 for l in lines if l.meets(l1) and l.meets(l2))


def transversals(l1: FpLine, l2: FpLine, lines: Sequence[FpLine]) -> list[FpLine]:
    if l1.meets(l2):
        raise BadReduction("l1 and l2 are not skew mod p")
    return [l for l in lines if l.meets(l1) and l.meets(l2)]


def good_primes(S, count: int = 3, start: int = 5, minpoly: MinPoly | None = None) -> list[int]:
    """Smallest primes >= ``start`` where the data reduces well (and splits)."""
    form = S.form if hasattr(S, "form") else S
    if minpoly is None:
        minpoly = _minpoly_of(form.terms.values())
    out = []
    for p in range(start, MAX_PRIME + 1):
        if not is_prime(p):
            continue
        try:
            if minpoly is not None and not split_roots(minpoly, p):
                continue
            reduce_mod_p(form, p, None if minpoly is None else split_roots(minpoly, p)[0])
        except BadPrime:
            continue
        out.append(p)
        if len(out) == count:
            break
    return out


def oracle_report(S, lines: dict, p: int, root: int | None = None,
                  pairs: Sequence[tuple[str, str]] | None = None) -> dict:
    """Line count of S mod p and transversal counts for skew pairs of named lines."""
    f = reduce_mod_p(S, p, root)
    minpoly = _minpoly_of(S.form.terms.values()) if hasattr(S, "form") else None
    if minpoly is None:
        for l in lines.values():
            minpoly = minpoly or _minpoly_of(list(l.A) + list(l.B))
    root = choose_root(minpoly, p, root)
    found = enumerate_lines(f)
    reduced = {name: reduce_line(l, p, root) for name, l in lines.items()}
    if pairs is None:
        pairs = [("l1", "l2")] if {"l1", "l2"} <= set(reduced) else []
    trans = {}
    for a, b in pairs:
        trans[f"{a},{b}"] = count_transversals(reduced[a], reduced[b], found)
    return {
        "prime": p,
        "root": root,
        "lines": len(found),
        "lines_on_surface": {name: (l in found) for name, l in reduced.items()},
        "transversals": trans,
    }


# -----------------------------------------------------------------------------
# points and singularity screen

def projective_points(p: int, n: int = 4):
    """Canonical representatives (first nonzero coordinate 1) of P^(n-1)(F_p)."""
    for k in range(n):
        for tail in product(range(p), repeat=n - k - 1):
            yield (0,) * k + (1,) + tail


def screen_singular_points(S, primes: Sequence[int]) -> dict:
    results = []
    good = 0
    verdict = "no singular point mod any tested prime"
    for p in primes:
        entry = {"prime": p}
        if p < 5 or not is_prime(p):
            entry["status"] = "bad prime"
            results.append(entry)
            continue
        try:
            f = reduce_mod_p(S, p)
        except BadPrime as exc:
            entry["status"] = "bad prime"
            entry["reason"] = str(exc)
            results.append(entry)
            continue
        good += 1
        grads = [f.diff(i) for i in range(4)]
        hit = None
        for x in projective_points(p):
            if all(g(x) == 0 for g in grads) and f(x) == 0:
                hit = x
                break
        if hit is None:
            entry["status"] = "no singular point found"
        else:
            entry["status"] = "singular point found"
            entry["point"] = list(hit)
            verdict = f"singular point found mod {p}"
        results.append(entry)
    if not good:
        raise NoGoodPrime("none of the given primes is usable")
    return {"heuristic": True, "verdict": verdict,
            "singular": verdict.startswith("singular"), "results": results}
