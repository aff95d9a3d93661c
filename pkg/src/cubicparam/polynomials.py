"""Sparse multivariate polynomials over exact scalars.

``MPoly`` stores a tuple of variable names and a dict from exponent tuples to
nonzero scalar coefficients.  Polynomials over different variable sets are
merged by name on the fly.  Terms are ordered graded-lexicographically with
respect to the variable tuple; the order is used for canonical rendering and
normalization only.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DivisionByZero, NotARoot, NotDivisible, Unsupported
from .scalars import QuadExt, Scalar, as_scalar, demote, format_scalar, is_rational

_VAR_RE = re.compile(r"([A-Za-z_]+)(\d*)$")


def var_key(name: str):
    m = _VAR_RE.match(name)
    if not m:
        return (name, -1)
    return (m.group(1), int(m.group(2)) if m.group(2) else -1)


def merge_vars(*var_sets: Iterable[str]) -> tuple[str, ...]:
    names = set()
    for vs in var_sets:
        names.update(vs)
    return tuple(sorted(names, key=var_key))


def grlex_key(e: tuple[int, ...]):
    return (sum(e), e)


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, QuadExt))


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, object] | None = None,
                 _clean: bool = True):
        self.vars = tuple(vars)
        if terms is None:
            self.terms = {}
        elif _clean:
            n = len(self.vars)
            clean = {}
            for e, c in terms.items():
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not match variables {self.vars}")
                if c:
                    clean[tuple(e)] = as_scalar(c)
            self.terms = clean
        else:
            self.terms = dict(terms)

    # -- constructors ---------------------------------------------------------
    @classmethod
    def const(cls, c, vars: Sequence[str] = ()) -> "MPoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, name: str, vars: Sequence[str] | None = None) -> "MPoly":
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            vars = merge_vars(vars, [name])
        e = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {e: Fraction(1)}, _clean=False)

    @classmethod
    def gens(cls, *names: str) -> tuple["MPoly", ...]:
        vars = tuple(names)
        return tuple(cls.var(n, vars) for n in names)

    @classmethod
    def linear_form(cls, coeffs: Sequence, vars: Sequence[str]) -> "MPoly":
        vars = tuple(vars)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * len(vars)
            e[i] = 1
            terms[tuple(e)] = c
        return cls(vars, terms)

    # -- basic queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        for c in self.terms.values():
            return c
        return Fraction(0)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var: str) -> int:
        if var not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def min_degree(self, var: str) -> int:
        if var not in self.vars or not self.terms:
            return 0
        i = self.vars.index(var)
        return min(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars)
                     if any(e[i] for e in self.terms))

    def sorted_terms(self) -> list[tuple[tuple, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple, Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def lc(self) -> Scalar:
        return self.leading_term()[1]

    def coeff(self, exps: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exps), Fraction(0))

    def coefficients(self) -> list[Scalar]:
        return [c for _, c in self.sorted_terms()]

    # -- variable management --------------------------------------------------
    def with_vars(self, vars: Sequence[str]) -> "MPoly":
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = []
        for v in self.vars:
            if v in vars:
                idx.append(vars.index(v))
            else:
                idx.append(None)
        n = len(vars)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for k, i in enumerate(idx):
                if i is None:
                    if e[k]:
                        raise ValueError(f"variable {self.vars[k]} is in use")
                else:
                    ne[i] = e[k]
            terms[tuple(ne)] = c
        return MPoly(vars, terms, _clean=False)

    def drop_unused(self) -> "MPoly":
        return self.with_vars(self.used_vars())

    def _align(self, other: "MPoly") -> tuple["MPoly", "MPoly"]:
        if self.vars == other.vars:
            return self, other
        vars = merge_vars(self.vars, other.vars)
        return self.with_vars(vars), other.with_vars(vars)

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if _is_scalar(other):
            return MPoly.const(other, self.vars)
        raise TypeError(f"cannot combine MPoly with {type(other).__name__}")

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, MPoly):
            if not _is_scalar(other):
                return NotImplemented
            other = MPoly.const(other, self.vars)
        a, b = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return MPoly(a.vars, terms, _clean=False)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()}, _clean=False)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, (MPoly, int, Fraction, QuadExt)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MPoly":
        c = as_scalar(c)
        if not c:
            return MPoly(self.vars)
        return MPoly(self.vars, {e: v * c for e, v in self.terms.items()}, _clean=False)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if not _is_scalar(other):
                return NotImplemented
            return self.scale(other)
        a, b = self._align(other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms: dict = {}
        bitems = list(b.terms.items())
        for ea, ca in a.terms.items():
            for eb, cb in bitems:
                e = tuple([x + y for x, y in zip(ea, eb)])
                v = ca * cb
                s = terms.get(e)
                terms[e] = v if s is None else s + v
        return MPoly(a.vars, {e: c for e, c in terms.items() if c}, _clean=False)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            if not other:
                raise DivisionByZero("division of polynomial by zero")
            inv = 1 / as_scalar(other)
            return self.scale(inv)
        if isinstance(other, MPoly):
            return exact_div(self, other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            a, b = self._align(other)
            return a.terms == b.terms
        if _is_scalar(other):
            if not other:
                return not self.terms
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        p = self.drop_unused()
        return hash((p.vars, frozenset(p.terms.items())))

    # -- calculus and substitution --------------------------------------------
    def diff(self, var: str) -> "MPoly":
        if var not in self.vars:
            return MPoly(self.vars)
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                terms[tuple(ne)] = c * e[i]
        return MPoly(self.vars, terms, _clean=False)

    def substitute(self, bindings: Mapping[str, object]) -> "MPoly":
        """Compose: replace each bound variable by a polynomial or scalar.

        Bindings for variables that do not occur are ignored; unbound
        variables pass through unchanged.
        """
        bound = {v: val for v, val in bindings.items() if v in self.vars}
        if not bound:
            return self
        keep = [v for v in self.vars if v not in bound]
        out_vars = merge_vars(keep, *(val.vars for val in bound.values()
                                      if isinstance(val, MPoly)))
        images = []
        for v in self.vars:
            val = bound.get(v, None)
            if val is None:
                images.append(MPoly.var(v, out_vars))
            elif isinstance(val, MPoly):
                images.append(val.with_vars(out_vars))
            else:
                images.append(MPoly.const(val, out_vars))
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                if k == 0:
                    cache[key] = None
                elif k == 1:
                    cache[key] = images[i]
                else:
                    cache[key] = power(i, k - 1) * images[i]
            return cache[key]

        acc: dict = {}
        for e, c in self.terms.items():
            t = MPoly.const(c, out_vars)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            for te, tc in t.terms.items():
                s = acc.get(te)
                acc[te] = tc if s is None else s + tc
        return MPoly(out_vars, {e: c for e, c in acc.items() if c}, _clean=False)

    def evaluate(self, values) -> Scalar:
        """Evaluate at a point: ``values`` is a mapping by name or a sequence
        aligned with ``self.vars``.  All variables must be given."""
        if isinstance(values, Mapping):
            vals = [values[v] for v in self.vars]
        else:
            vals = list(values)
            if len(vals) != len(self.vars):
                raise ValueError("wrong number of values")
        powers: list[dict] = [dict() for _ in vals]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    pw = powers[i].get(k)
                    if pw is None:
                        pw = vals[i] ** k
                        powers[i][k] = pw
                    t = t * pw
            total = total + t
        return total

    def coefficients_in(self, var: str) -> list["MPoly"]:
        """``[c0, ..., cd]`` with ``self = sum(ci * var**i)``; ``var`` is dropped."""
        if var not in self.vars:
            return [self] if self.terms else []
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        d = self.degree(var)
        buckets: list[dict] = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + e[i + 1:]] = c
        return [MPoly(rest, b, _clean=False) for b in buckets]

    @classmethod
    def from_coefficients_in(cls, coeffs: Sequence["MPoly"], var: str,
                             vars: Sequence[str]) -> "MPoly":
        vars = tuple(vars)
        i = vars.index(var)
        rest = vars[:i] + vars[i + 1:]
        terms = {}
        for k, c in enumerate(coeffs):
            c = c.with_vars(rest) if isinstance(c, MPoly) else MPoly.const(c, rest)
            for e, v in c.terms.items():
                terms[e[:i] + (k,) + e[i:]] = v
        return cls(vars, terms, _clean=False)

    def dehomogenize(self, var: str) -> "MPoly":
        """Set ``var = 1`` and drop it from the variable set."""
        if var not in self.vars:
            return self
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        acc: dict = {}
        for e, c in self.terms.items():
            ne = e[:i] + e[i + 1:]
            s = acc.get(ne)
            acc[ne] = c if s is None else s + c
        return MPoly(rest, {e: c for e, c in acc.items() if c}, _clean=False)

    def homogenize(self, var: str, degree: int | None = None) -> "MPoly":
        if degree is None:
            degree = self.total_degree()
        vars = merge_vars(self.vars, [var]) if var not in self.vars else self.vars
        p = self.with_vars(vars)
        i = vars.index(var)
        terms = {}
        for e, c in p.terms.items():
            ne = list(e)
            d = sum(e)
            if d > degree:
                raise ValueError("degree too small to homogenize")
            ne[i] += degree - d
            terms[tuple(ne)] = c
        return MPoly(vars, terms, _clean=False)

    # -- coefficient maps -----------------------------------------------------
    def map_coeffs(self, fn) -> "MPoly":
        return MPoly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    def conjugate(self) -> "MPoly":
        from .scalars import conjugate
        return self.map_coeffs(conjugate)

    def is_rational(self) -> bool:
        return all(is_rational(c)[0] for c in self.terms.values())

    def demote(self) -> "MPoly":
        return MPoly(self.vars, {e: demote(c) for e, c in self.terms.items()}, _clean=False)

    def monic(self) -> "MPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if not self.terms:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def primitive(self) -> "MPoly":
        """Rational polynomials: coprime integer coefficients, positive leading term.
        Other polynomials: monic."""
        if not self.terms:
            return self
        if not self.is_rational():
            return self.monic()
        from math import gcd as igcd, lcm
        coeffs = [Fraction(demote(c)) for c in self.terms.values()]
        den = lcm(*(c.denominator for c in coeffs))
        num = 0
        for c in coeffs:
            num = igcd(num, (c * den).numerator)
        f = Fraction(den, num)
        if self.lc() * f < 0:
            f = -f
        return self.demote().scale(f)

    # -- rendering ------------------------------------------------------------
    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"MPoly({self.vars}, {render(self)!r})"


# -----------------------------------------------------------------------------
# rendering

def render_monomial(vars: Sequence[str], e: Sequence[int]) -> str:
    parts = []
    for v, k in zip(vars, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def render(p: MPoly, gen: str = "w") -> str:
    """Canonical text: graded-lex descending terms, explicit ``*`` and ``^``."""
    if not p.terms:
        return "0"
    out = []
    for e, c in p.sorted_terms():
        mon = render_monomial(p.vars, e)
        ok, r = is_rational(c)
        if ok:
            if not mon:
                s = str(r)
            elif r == 1:
                s = mon
            elif r == -1:
                s = "-" + mon
            else:
                s = f"{r}*{mon}"
        else:
            cs = format_scalar(c, gen)
            s = f"{cs}*{mon}" if mon else cs
        if not out:
            out.append(s)
        elif s.startswith("-"):
            out.append(" - " + s[1:])
        else:
            out.append(" + " + s)
    return "".join(out)


# -----------------------------------------------------------------------------
# division

def divmod_poly(f: MPoly, g: MPoly) -> tuple[MPoly, MPoly]:
    """Multivariate division by a single divisor in graded-lex order."""
    if g.is_zero():
        raise DivisionByZero("polynomial division by zero")
    f, g = f._align(g)
    ge, gc = g.leading_term()
    ginv = 1 / gc
    q: dict = {}
    r: dict = {}
    p = MPoly(f.vars, dict(f.terms), _clean=False)
    gterms = list(g.terms.items())
    while p.terms:
        e = max(p.terms, key=grlex_key)
        c = p.terms[e]
        if all(x >= y for x, y in zip(e, ge)):
            qe = tuple(x - y for x, y in zip(e, ge))
            qc = c * ginv
            q[qe] = q.get(qe, 0) + qc
            terms = p.terms
            for te, tc in gterms:
                ne = tuple(a + b for a, b in zip(qe, te))
                v = terms.get(ne, 0) - qc * tc
                if v:
                    terms[ne] = v
                else:
                    terms.pop(ne, None)
        else:
            r[e] = c
            del p.terms[e]
    return MPoly(f.vars, q), MPoly(f.vars, r)


def exact_div(f: MPoly, g) -> MPoly:
    if _is_scalar(g):
        return f / g
    if g.is_constant() and not g.is_zero():
        return f.with_vars(merge_vars(f.vars, g.vars)) / g.constant_value()
    q, r = divmod_poly(f, g)
    if not r.is_zero():
        raise NotDivisible("polynomial division leaves a remainder")
    return q


def _div(a, b):
    """Exact quotient of scalars or polynomials."""
    if isinstance(a, MPoly) or isinstance(b, MPoly):
        if not isinstance(a, MPoly):
            a = MPoly.const(a, b.vars)
        return exact_div(a, b)
    if not b:
        raise DivisionByZero("division by zero")
    return as_scalar(a) / as_scalar(b)


# -----------------------------------------------------------------------------
# gcd

_MAX_GCD_VARS = 4


def _content_list(coeffs: list[MPoly]) -> MPoly:
    g = None
    for c in coeffs:
        if c.is_zero():
            continue
        g = c if g is None else _gcd_rec(g, c)
        if g.is_constant():
            return MPoly.const(1, g.vars)
    return g


def _prem(A: list[MPoly], B: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder of univariate polynomials (coefficient lists, index = power)."""
    A = list(A)
    m, n = len(A) - 1, len(B) - 1
    lcB = B[-1]
    e = m - n + 1
    while len(A) - 1 >= n and A:
        d = len(A) - 1 - n
        lcA = A[-1]
        A = [a * lcB for a in A]
        for i, b in enumerate(B):
            A[i + d] = A[i + d] - lcA * b
        A.pop()
        e -= 1
        while A and A[-1].is_zero():
            A.pop()
    if e > 0 and A:
        f = lcB ** e
        A = [a * f for a in A]
    return A


def _subresultant_last(A: list[MPoly], B: list[MPoly]) -> list[MPoly]:
    """Last nonzero member of the subresultant PRS of A, B (deg A >= deg B)."""
    one = MPoly.const(1, A[-1].vars)
    g = h = one
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B)
        if not R:
            return B
        if len(R) == 1:
            return R
        A, B = B, [exact_div(r, g * h ** delta) for r in R]
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = exact_div(g ** delta, h ** (delta - 1))


def _gcd_rec(p: MPoly, q: MPoly) -> MPoly:
    p, q = p._align(q)
    vars = p.vars
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    main = None
    for v in reversed(vars):
        if p.degree(v) > 0 or q.degree(v) > 0:
            main = v
            break
    if main is None:
        return MPoly.const(1, vars)
    P = p.coefficients_in(main)
    Q = q.coefficients_in(main)
    cp, cq = _content_list(P), _content_list(Q)
    P = [exact_div(c, cp) for c in P]
    Q = [exact_div(c, cq) for c in Q]
    c = _gcd_rec(cp, cq)
    if len(P) < len(Q):
        P, Q = Q, P
    G = _subresultant_last(P, Q)
    if len(G) == 1:
        G = [MPoly.const(1, c.vars)]
    else:
        cg = _content_list(G)
        G = [exact_div(x, cg) for x in G]
    g = MPoly.from_coefficients_in(G, main, vars)
    return (g * c.with_vars(merge_vars(c.vars, vars))).with_vars(vars).monic()


def _univariate_gcd(a: list, b: list) -> list:
    def trim(x):
        while x and not x[-1]:
            x.pop()
        return x

    a, b = trim(list(a)), trim(list(b))
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            f = r[-1] / b[-1]
            d = len(r) - len(b)
            for i, bc in enumerate(b):
                r[i + d] = r[i + d] - f * bc
            r.pop()
            trim(r)
        a, b = b, r
    return a


def coprime_certificate(a: MPoly, b: MPoly, trials: int = 3, seed: int = 1729) -> bool:
    """Randomized check that ``a`` and ``b`` share no nonconstant factor.

    Both are restricted to random affine lines; a single line on which the
    univariate gcd is constant certifies coprimality.
    """
    a, b = a._align(b)
    if a.is_zero() or b.is_zero():
        return (a.is_constant() and not a.is_zero()) or (b.is_constant() and not b.is_zero())
    rng = random.Random(seed)
    t = "_t"
    for _ in range(max(trials, 3)):
        bind = {v: MPoly((t,), {(1,): rng.randint(-50, 50) or 1,
                                (0,): rng.randint(-50, 50)})
                for v in a.vars}
        ua = a.substitute(bind).with_vars((t,))
        ub = b.substitute(bind).with_vars((t,))
        la = [ua.coeff((k,)) for k in range(ua.total_degree() + 1)]
        lb = [ub.coeff((k,)) for k in range(ub.total_degree() + 1)]
        if not la or not lb:
            continue
        if len(_univariate_gcd(la, lb)) <= 1:
            return True
    return False


def gcd(p: MPoly, q: MPoly) -> MPoly:
    """Greatest common divisor, normalized to graded-lex leading coefficient 1.

    Homogeneous inputs are dehomogenized in their first variable, which drops
    one variable from the recursion; the power of that variable dividing both
    is restored afterwards.
    """
    p, q = p._align(q)
    if len(set(p.used_vars()) | set(q.used_vars())) > _MAX_GCD_VARS:
        raise Unsupported(f"gcd supports at most {_MAX_GCD_VARS} variables")
    if p.is_zero() or q.is_zero():
        return _gcd_rec(p, q)
    if len(p.vars) >= 2 and p.is_homogeneous() and q.is_homogeneous():
        v0 = p.vars[0]
        k = min(p.min_degree(v0), q.min_degree(v0))
        g = _gcd_rec(p.dehomogenize(v0), q.dehomogenize(v0))
        g = g.homogenize(v0).with_vars(p.vars)
        if k:
            g = g * MPoly.var(v0, p.vars) ** k
        g = g.monic()
    else:
        g = _gcd_rec(p, q)
    return g


def gcd_many(polys: Iterable[MPoly]) -> MPoly:
    g = None
    for p in polys:
        if p.is_zero():
            continue
        g = p if g is None else gcd(g, p)
        if g.is_constant():
            break
    if g is None:
        raise ValueError("gcd of zero polynomials")
    return g.monic()


# -----------------------------------------------------------------------------
# rational functions

class RatFn:
    """Reduced quotient ``num/den``; the denominator is monic in graded-lex."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly, reduce: bool = True):
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        num, den = num._align(den)
        self.num, self.den = num, den
        if reduce:
            self._reduce()

    def _reduce(self):
        g = gcd(self.num, self.den)
        num, den = self.num, self.den
        if not g.is_constant():
            num, den = exact_div(num, g), exact_div(den, g)
        lc = den.lc()
        self.num, self.den = num / lc, den / lc

    def evaluate(self, values) -> Scalar:
        d = self.den.evaluate(values)
        if not d:
            raise DivisionByZero("denominator vanishes")
        return self.num.evaluate(values) / d

    def __eq__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __str__(self):
        return render_ratfn(self)

    def __repr__(self):
        return f"RatFn({self})"


def render_ratfn(r: RatFn) -> str:
    return f"({render(r.num)})/({render(r.den)})"


# -----------------------------------------------------------------------------
# binary forms

class BinaryForm:
    """Homogeneous form of degree d in (u, v).

    ``coeffs[i]`` is the coefficient of ``u^(d-i) * v^i``.  Coefficients are
    scalars or ``MPoly`` (parameter-dependent forms).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = list(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(bool(c) for c in self.coeffs)

    def evaluate(self, u, v):
        d = self.degree
        total = 0
        for i, c in enumerate(self.coeffs):
            total = total + c * (u ** (d - i)) * (v ** i)
        return total

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BinaryForm(out)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return (self.degree == other.degree
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def as_mpoly(self, u: str = "u", v: str = "v") -> MPoly:
        d = self.degree
        vars = (u, v)
        acc = MPoly(vars)
        for i, c in enumerate(self.coeffs):
            mon = MPoly(vars, {(d - i, i): 1})
            acc = acc + mon * c
        return acc

    def __repr__(self):
        return f"BinaryForm({self.coeffs!r})"


def linear_form(a, b) -> BinaryForm:
    """``a*u + b*v``."""
    return BinaryForm([a, b])


def root_of_linear(L: BinaryForm) -> tuple:
    """The point ``(u:v)`` where a linear binary form vanishes."""
    if L.degree != 1:
        raise ValueError("not a linear form")
    a, b = L.coeffs
    return (b, -a)


def exact_divide_binary(F: BinaryForm, L: BinaryForm) -> BinaryForm:
    """Quotient ``Q`` with ``F = L*Q``; raises :class:`NotARoot` otherwise."""
    if L.degree != 1:
        raise ValueError("divisor must be linear")
    a, b = L.coeffs
    d = F.degree
    f = F.coeffs
    if d < 1:
        if F.is_zero():
            return BinaryForm([])
        raise NotARoot("cannot divide a constant by a linear form")
    q = [None] * d
    try:
        if a:
            q[0] = _div(f[0], a)
            for i in range(1, d):
                q[i] = _div(f[i] - b * q[i - 1], a)
            rem = f[d] - b * q[d - 1]
        elif b:
            q[d - 1] = _div(f[d], b)
            for i in range(d - 1, 0, -1):
                q[i - 1] = _div(f[i] - a * q[i], b)
            rem = f[0] - a * q[0]
        else:
            raise DivisionByZero("zero linear form")
    except NotDivisible as exc:
        raise NotARoot(str(exc)) from exc
    if rem:
        raise NotARoot("linear factor does not divide the form")
    return BinaryForm(q)
