"""Codependence matrices, monoid linear systems, and the monoidal complex:
membership of codimension-2 flats, kernel multiplicity, and the explicit
curve equation in the plane case.

The membership test normalizes coordinates so the LAST input point becomes
(1:0:...:0); the remaining nd points project to P^(n-1) (drop the first
coordinate) and each pairs with the parameter, on the pencil of hyperplanes
through the flat, of the hyperplane joining the flat to the point.  The
resulting nd x nd monomial-evaluation determinant vanishes exactly on the
members.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import FullComplexError, LogBundleError
from .linalg import Matrix, rat
from .poly import (
    BinaryForm,
    MultiPoly,
    binary_resultant,
    graded_lex_monomials,
    interpolate_dense,
)
from .projgeom import RNC, Flat2, _coords, assert_general_position
from .quadrics import quadric_curve_rows, quadric_flat_rows


@dataclass(frozen=True)
class CodepMatrix:
    """Evaluation matrix of the nd monomials x_a y0^(d-1-e) y1^e (a major,
    e minor) at the paired points; its determinant detects (d-1)-codependence."""

    matrix: Matrix
    xs: tuple
    ys: tuple
    d: int

    def determinant(self) -> Fraction:
        return self.matrix.det()

    def kernel_dim(self) -> int:
        return self.matrix.cols - self.matrix.rank()


def codependence_matrix(xs, ys, d: int) -> CodepMatrix:
    if d < 1:
        raise LogBundleError("d must be >= 1")
    xs = [tuple(rat(c) for c in _coords(x)) for x in xs]
    ys = [tuple(rat(c) for c in _coords(y)) for y in ys]
    if not xs or len(xs) != len(ys):
        raise LogBundleError("need matching nonempty point lists")
    n = len(xs[0])
    if any(len(x) != n for x in xs) or any(len(y) != 2 for y in ys):
        raise LogBundleError("points of mixed dimension")
    if len(xs) != n * d:
        raise LogBundleError(f"need exactly nd = {n * d} pairs, got {len(xs)}")
    rows = []
    for x, y in zip(xs, ys):
        rows.append([
            x[a] * y[0] ** (d - 1 - e) * y[1] ** e
            for a in range(n)
            for e in range(d)
        ])
    return CodepMatrix(matrix=Matrix(rows, cols=n * d), xs=tuple(xs), ys=tuple(ys), d=d)


def _membership_codep(points, z: Flat2) -> CodepMatrix:
    """Reduce nd+1 points plus a flat to the codependence data, electing the
    last point as the screen."""
    pts = [list(_coords(p)) for p in points]
    n = len(pts[0]) - 1
    if z.n != n:
        raise LogBundleError("flat lives in the wrong ambient space")
    if (len(pts) - 1) % n != 0 or len(pts) < n + 1:
        raise LogBundleError(f"need nd+1 points for some d >= 1, got {len(pts)}")
    d = (len(pts) - 1) // n
    assert_general_position(pts, n)
    q = pts[-1]
    pivot = next(i for i, c in enumerate(q) if c != 0)
    cols = [q] + [
        [Fraction(1) if r == j else Fraction(0) for r in range(n + 1)]
        for j in range(n + 1)
        if j != pivot
    ]
    norm = Matrix(cols).transpose().inverse()  # sends q to (1:0:...:0)
    xs = []
    ys = []
    for p in pts[:-1]:
        moved = norm.apply(p)
        xs.append(tuple(moved[1:]))
        ys.append((
            sum((a * b for a, b in zip(z.rows.row(0), p)), Fraction(0)),
            sum((a * b for a, b in zip(z.rows.row(1), p)), Fraction(0)),
        ))
    rows = []
    for x, y in zip(xs, ys):
        rows.append([
            x[a] * y[0] ** (d - 1 - e) * y[1] ** e
            for a in range(n)
            for e in range(d)
        ])
    return CodepMatrix(matrix=Matrix(rows, cols=n * d), xs=tuple(xs), ys=tuple(ys), d=d)


def membership_determinant(points, z: Flat2) -> Fraction:
    return _membership_codep(points, z).determinant()


def monoidal_membership(points, z: Flat2) -> bool:
    """Does some degree-d monoid with (d-1)-fold locus z pass through all
    nd+1 points?  Decided by the vanishing of the membership determinant."""
    return membership_determinant(points, z) == 0


def monoidal_kernel_dim(points, z: Flat2) -> int:
    return _membership_codep(points, z).kernel_dim()


def curve_equation_p2(points, d: int | None = None) -> MultiPoly:
    """Equation of the plane monoidal complex of 2d+1 general points.

    The membership determinant is sampled on the affine chart z0 = 1 (flat
    rows (z1,-1,0) and (z2,0,-1)) over a principal lattice plus ten
    oversamples, interpolated at degree d(d-1), and normalized to integer
    coefficients of content 1 with positive graded-lex leading term."""
    pts = [list(_coords(p)) for p in points]
    if any(len(p) != 3 for p in pts):
        raise LogBundleError("plane curve equation needs points of P^2")
    if d is None:
        if (len(pts) - 1) % 2 != 0:
            raise LogBundleError("need 2d+1 points")
        d = (len(pts) - 1) // 2
    if d < 2:
        raise LogBundleError("need d >= 2; the complex is not a curve below that")
    if len(pts) != 2 * d + 1:
        raise LogBundleError(f"need 2d+1 = {2 * d + 1} points, got {len(pts)}")
    assert_general_position(pts, 2)
    degree = d * (d - 1)
    needed = comb(degree + 2, 2) + 10
    samples = []
    diag = 0
    while len(samples) < needed:
        for a in range(diag + 1):
            b = diag - a
            z = Flat2((a, -1, 0), (b, 0, -1))
            samples.append(((Fraction(a), Fraction(b)), membership_determinant(pts, z)))
            if len(samples) == needed:
                break
        diag += 1
    if all(v == 0 for _, v in samples):
        raise FullComplexError(
            "membership determinant vanishes identically; "
            "every flat admits a monoid through the points"
        )
    return interpolate_dense(3, degree, samples).integer_normalized()


def monoid_space_dim(n: int, d: int, c: int) -> int:
    """Projective dimension of the degree-d monoids with a fixed
    (d-1)-fold flat of codimension c."""
    if d < 2 or c < 2 or c > n:
        raise LogBundleError("need d >= 2 and 2 <= c <= n")
    return comb(c + d - 2, d - 1) * (n - c + 1) + comb(c + d - 1, d) - 1


def monoid_basis(z, d: int) -> list[MultiPoly]:
    """Basis of degree-d forms vanishing to order d-1 along the flat.

    All partials of order <= d-2 are restricted to a parametrization of the
    flat and required to vanish identically.  Accepts a Flat2 or any matrix
    of independent form rows (so higher-codimension flats work too)."""
    if d < 2:
        raise LogBundleError("monoids need d >= 2")
    flat_rows = z.rows if isinstance(z, Flat2) else Matrix([list(_coords(r)) for r in z])
    if flat_rows.rank() != flat_rows.rows:
        raise LogBundleError("flat rows must be independent")
    n_amb = flat_rows.cols - 1
    param = flat_rows.right_kernel()
    images = [list(param.col(i)) for i in range(n_amb + 1)]
    mons = graded_lex_monomials(n_amb + 1, d)
    cond_rows = []
    for order in range(d - 1):
        for gamma in graded_lex_monomials(n_amb + 1, order):
            u_mons = graded_lex_monomials(param.rows, d - order)
            block = {um: [Fraction(0)] * len(mons) for um in u_mons}
            for col, exps in enumerate(mons):
                poly = MultiPoly.monomial(n_amb + 1, exps)
                for var, times in enumerate(gamma):
                    for _ in range(times):
                        poly = poly.partial(var)
                restricted = poly.substitute_linear(images)
                for um, coeff in restricted.terms.items():
                    block[um][col] = coeff
            cond_rows.extend(block[um] for um in u_mons)
    kern = Matrix(cond_rows, cols=len(mons)).right_kernel()
    return [
        MultiPoly.from_coeff_vector(n_amb + 1, d, kern.row(i))
        for i in range(kern.rows)
    ]


def monoid_through_points(z, d: int, points) -> MultiPoly | None:
    """Some element of the monoid system through all the points, or None."""
    basis = monoid_basis(z, d)
    if not basis:
        return None
    rows = []
    for p in points:
        coords = _coords(p)
        rows.append([b.evaluate(coords) for b in basis])
    kern = Matrix(rows, cols=len(basis)).right_kernel()
    if kern.rows == 0:
        return None
    combo = MultiPoly.zero(basis[0].n_vars)
    for c, b in zip(kern.row(0), basis):
        combo = combo + b.scale(c)
    return combo.integer_normalized()


def rnc_meets_flat(c: RNC, z: Flat2) -> bool:
    """Does the curve meet the flat?  Shared projective root of the two
    pulled-back binary forms, detected by the resultant."""
    f = c.pullback_form(z.rows.row(0))
    g = c.pullback_form(z.rows.row(1))
    return binary_resultant(f, g) == 0


def exists_quadric_through_curve_and_flat(c: RNC, z: Flat2) -> bool:
    if c.n != z.n:
        raise LogBundleError("curve and flat live in different spaces")
    rows = quadric_curve_rows(c)
    rows.extend(quadric_flat_rows(z.rows))
    kern = Matrix(rows, cols=comb(c.n + 2, 2)).right_kernel()
    return kern.rows > 0
