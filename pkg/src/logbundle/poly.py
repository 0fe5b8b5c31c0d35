"""Sparse multivariate polynomials and binary forms over the rationals.

Monomial order is graded lexicographic with the first variable largest;
coefficient vectors of homogeneous polynomials are always indexed by
graded_lex_monomials, and that single convention is shared by the Veronese
maps, vanishing-space fits and interpolation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import InterpolationError, LogBundleError
from .linalg import Matrix, Vec, integer_primitive, rat


@lru_cache(maxsize=None)
def graded_lex_monomials(n_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of the given total degree, graded-lex descending."""
    if n_vars < 1:
        raise LogBundleError("need at least one variable")
    if n_vars == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        for rest in graded_lex_monomials(n_vars - 1, degree - e):
            out.append((e,) + rest)
    return tuple(out)


def monomial_count(n_vars: int, degree: int) -> int:
    return comb(n_vars + degree - 1, degree)


_DEFAULT_NAMES = ("x", "y", "z", "w")


class MultiPoly:
    """Sparse polynomial: dict from exponent tuple to nonzero Fraction."""

    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars: int, terms=None):
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            c = rat(c)
            if len(exps) != n_vars:
                raise LogBundleError("exponent tuple has wrong length")
            if c != 0:
                clean[tuple(int(e) for e in exps)] = c
        self.n_vars = n_vars
        self.terms = clean

    @staticmethod
    def zero(n_vars: int) -> "MultiPoly":
        return MultiPoly(n_vars, {})

    @staticmethod
    def constant(n_vars: int, c) -> "MultiPoly":
        return MultiPoly(n_vars, {(0,) * n_vars: rat(c)})

    @staticmethod
    def variable(n_vars: int, i: int) -> "MultiPoly":
        exps = [0] * n_vars
        exps[i] = 1
        return MultiPoly(n_vars, {tuple(exps): Fraction(1)})

    @staticmethod
    def monomial(n_vars: int, exps, c=1) -> "MultiPoly":
        return MultiPoly(n_vars, {tuple(exps): rat(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n_vars, frozenset(self.terms.items())))

    def _check(self, other: "MultiPoly"):
        if self.n_vars != other.n_vars:
            raise LogBundleError("polynomials in different variable counts")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return MultiPoly(self.n_vars, terms)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.n_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def scale(self, c) -> "MultiPoly":
        c = rat(c)
        if c == 0:
            return MultiPoly.zero(self.n_vars)
        return MultiPoly(self.n_vars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return MultiPoly(self.n_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise LogBundleError("negative power of a polynomial")
        out = MultiPoly.constant(self.n_vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, point) -> Fraction:
        vals = [rat(v) for v in point]
        if len(vals) != self.n_vars:
            raise LogBundleError("evaluation point has wrong length")
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(vals, exps):
                term *= v ** e
            total += term
        return total

    def partial(self, i: int) -> "MultiPoly":
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            if exps[i] == 0:
                continue
            e = list(exps)
            e[i] -= 1
            terms[tuple(e)] = c * exps[i]
        return MultiPoly(self.n_vars, terms)

    def substitute_linear(self, images: list) -> "MultiPoly":
        """Substitute x_i -> sum_j images[i][j] * u_j, returning a poly in the u's."""
        if len(images) != self.n_vars:
            raise LogBundleError("need one image per variable")
        n_new = len(images[0])
        lins = [
            MultiPoly(n_new, {tuple(1 if j == k else 0 for k in range(n_new)): rat(c)
                              for j, c in enumerate(img)})
            for img in images
        ]
        out = MultiPoly.zero(n_new)
        for exps, c in self.terms.items():
            term = MultiPoly.constant(n_new, c)
            for lin, e in zip(lins, exps):
                term = term * lin ** e
            out = out + term
        return out

    def coeff_vector(self, degree: int) -> Vec:
        """Coefficients on the graded-lex monomial basis of the given degree."""
        if not self.is_zero() and (not self.is_homogeneous() or self.degree() != degree):
            raise LogBundleError("polynomial is not homogeneous of the stated degree")
        return tuple(
            self.terms.get(m, Fraction(0))
            for m in graded_lex_monomials(self.n_vars, degree)
        )

    @staticmethod
    def from_coeff_vector(n_vars: int, degree: int, coeffs) -> "MultiPoly":
        mons = graded_lex_monomials(n_vars, degree)
        if len(coeffs) != len(mons):
            raise LogBundleError("coefficient vector has wrong length")
        return MultiPoly(n_vars, dict(zip(mons, (rat(c) for c in coeffs))))

    def integer_normalized(self) -> "MultiPoly":
        """Integer coefficients, content 1, positive graded-lex leading term."""
        if self.is_zero():
            return self
        order = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        coeffs = integer_primitive([self.terms[e] for e in order])
        return MultiPoly(self.n_vars, dict(zip(order, coeffs)))

    def sorted_terms(self):
        """(exponents, coefficient) pairs, graded-lex descending."""
        return [
            (e, self.terms[e])
            for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        ]

    def render(self, names=None) -> str:
        if self.is_zero():
            return "0"
        if names is None:
            names = (
                _DEFAULT_NAMES[: self.n_vars]
                if self.n_vars <= len(_DEFAULT_NAMES)
                else tuple(f"x{i}" for i in range(self.n_vars))
            )
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"MultiPoly({self.render()})"


class BinaryForm:
    """Homogeneous form in (s, t); coeffs[k] multiplies s^(d-k) t^k."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = tuple(rat(c) for c in coeffs)
        if len(coeffs) != degree + 1:
            raise LogBundleError("binary form needs degree+1 coefficients")
        self.degree = degree
        self.coeffs = coeffs

    @staticmethod
    def monomial(degree: int, k: int) -> "BinaryForm":
        return BinaryForm(degree, [1 if i == k else 0 for i in range(degree + 1)])

    @staticmethod
    def vanishing_at(s0, t0) -> "BinaryForm":
        """The linear form t0*s - s0*t, zero exactly at (s0 : t0)."""
        s0, t0 = rat(s0), rat(t0)
        if s0 == 0 and t0 == 0:
            raise LogBundleError("(0,0) is not a point of the projective line")
        return BinaryForm(1, [t0, -s0])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def evaluate(self, s, t) -> Fraction:
        s, t = rat(s), rat(t)
        d = self.degree
        return sum(
            (c * s ** (d - k) * t ** k for k, c in enumerate(self.coeffs)),
            Fraction(0),
        )

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise LogBundleError("adding binary forms of different degrees")
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c) -> "BinaryForm":
        c = rat(c)
        return BinaryForm(self.degree, [c * a for a in self.coeffs])

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        d = self.degree + other.degree
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return BinaryForm(d, out)

    def __pow__(self, k: int) -> "BinaryForm":
        out = BinaryForm(0, [1])
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return f"BinaryForm(deg={self.degree}, {[str(c) for c in self.coeffs]})"


def binary_resultant(f: BinaryForm, g: BinaryForm) -> Fraction:
    """Sylvester resultant; zero iff f and g share a projective root."""
    if f.is_zero() or g.is_zero():
        raise LogBundleError("resultant of the zero form is undefined")
    m, n = f.degree, g.degree
    if m < 1 or n < 1:
        raise LogBundleError("resultant needs two forms of positive degree")
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(f.coeffs) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g.coeffs) + [0] * (size - n - 1 - i))
    return Matrix(rows).det()


def root_multiplicity(f: BinaryForm, s0, t0) -> int:
    """Multiplicity of (s0 : t0) as a projective root of f."""
    s0, t0 = rat(s0), rat(t0)
    if s0 == 0 and t0 == 0:
        raise LogBundleError("(0,0) is not a point of the projective line")
    if f.is_zero():
        raise LogBundleError("every point is a root of the zero form")
    if s0 == 0:
        # Root at (0:1): multiplicity is the power of s dividing f.
        top = max(k for k, c in enumerate(f.coeffs) if c != 0)
        return f.degree - top
    # Dehomogenize at s = 1; the root sits at t = t0/s0.
    poly = list(f.coeffs)  # poly[k] multiplies t^k
    root = t0 / s0
    mult = 0
    while any(c != 0 for c in poly):
        # Synthetic division by (t - root).
        quot = [Fraction(0)] * (len(poly) - 1)
        acc = Fraction(0)
        for k in range(len(poly) - 1, 0, -1):
            acc = acc * root + poly[k]
            quot[k - 1] = acc
        if acc * root + poly[0] != 0:
            return mult
        mult += 1
        poly = quot
    return mult


def fit_vanishing(n_vars: int, degree: int, constraints) -> list[MultiPoly]:
    """Basis of degree-`degree` forms killed by every constraint functional.

    Each constraint is a vector on the graded-lex coefficient basis.
    """
    mons = graded_lex_monomials(n_vars, degree)
    rows = []
    for c in constraints:
        if len(c) != len(mons):
            raise LogBundleError("constraint vector has wrong length")
        rows.append(list(c))
    mat = Matrix(rows, cols=len(mons))
    kern = mat.right_kernel()
    return [
        MultiPoly.from_coeff_vector(n_vars, degree, kern.row(i))
        for i in range(kern.rows)
    ]


def interpolate_dense(n_vars: int, degree: int, samples) -> MultiPoly:
    """Unique degree-<=degree polynomial through the samples, homogenized.

    Samples are (affine_point, value) pairs on the chart where the first
    variable equals 1; affine points carry the remaining n_vars-1 coordinates.
    Raises InterpolationError when the system is inconsistent or the sample
    set leaves free coefficients.
    """
    mons = graded_lex_monomials(n_vars, degree)
    rows = []
    rhs = []
    seen = set()
    for point, value in samples:
        pt = tuple(rat(x) for x in point)
        if len(pt) != n_vars - 1:
            raise LogBundleError("affine sample point has wrong length")
        if pt in seen:
            raise LogBundleError("duplicate sample point")
        seen.add(pt)
        row = []
        for exps in mons:
            term = Fraction(1)
            for v, e in zip(pt, exps[1:]):
                term *= v ** e
            row.append(term)
        rows.append(row)
        rhs.append(rat(value))
    if len(rows) < len(mons):
        raise InterpolationError("not enough samples for the monomial basis")
    mat = Matrix(rows, cols=len(mons))
    if mat.rank() < len(mons):
        raise InterpolationError("rank-deficient sample set")
    sol = mat.solve(rhs)
    if sol is None:
        raise InterpolationError("inconsistent samples")
    return MultiPoly(n_vars, dict(zip(mons, sol)))
