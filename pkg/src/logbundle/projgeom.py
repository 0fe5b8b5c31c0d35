"""Projective points, hyperplanes, flats, lines, and rational normal curves.

Conventions fixed here and used everywhere else:
  - points and forms are stored normalized (first nonzero coordinate = 1);
  - Plucker coordinates are the 2x2 minors p_ij, i < j, in lexicographic
    pair order;
  - a rational normal curve is an invertible coefficient matrix M applied
    to the moment vector (s^n, s^(n-1) t, ..., t^n).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import GeneralPositionError, LogBundleError
from .linalg import Matrix, Vec, normalize_projective, rat, vec
from .poly import BinaryForm, graded_lex_monomials


def _coords(obj, n: int | None = None) -> tuple[Fraction, ...]:
    """Coordinate tuple of a point/form-like object, optionally length-checked."""
    if isinstance(obj, (ProjPoint, HyperplaneForm)):
        c = obj.coords
    else:
        c = tuple(rat(x) for x in obj)
    if n is not None and len(c) != n + 1:
        raise LogBundleError(f"expected {n + 1} coordinates, got {len(c)}")
    return c


class ProjPoint:
    """Point of P^n; coords normalized so the first nonzero entry is 1."""

    __slots__ = ("n", "coords")

    def __init__(self, coords):
        c = normalize_projective(_coords(coords))
        object.__setattr__(self, "n", len(c) - 1)
        object.__setattr__(self, "coords", c)

    def __setattr__(self, k, v):
        raise AttributeError("ProjPoint is immutable")

    def __eq__(self, other):
        return isinstance(other, type(self)) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __repr__(self):
        return f"{type(self).__name__}({':'.join(str(c) for c in self.coords)})"


class HyperplaneForm(ProjPoint):
    """Linear form on P^n, same storage as a point of the dual space."""

    __slots__ = ()

    def evaluate(self, point) -> Fraction:
        p = _coords(point, self.n)
        return sum((a * b for a, b in zip(self.coords, p)), Fraction(0))

    def dual_point(self) -> ProjPoint:
        return ProjPoint(self.coords)


class Flat2:
    """Codimension-2 flat cut out by the two independent form rows."""

    __slots__ = ("n", "rows")

    def __init__(self, row0, row1):
        r0, r1 = _coords(row0), _coords(row1)
        if len(r0) != len(r1):
            raise LogBundleError("flat rows of different lengths")
        m = Matrix([list(r0), list(r1)])
        if m.rank() != 2:
            raise LogBundleError("flat rows are dependent")
        object.__setattr__(self, "n", len(r0) - 1)
        object.__setattr__(self, "rows", m)

    def __setattr__(self, k, v):
        raise AttributeError("Flat2 is immutable")

    def contains(self, point) -> bool:
        p = _coords(point, self.n)
        return all(x == 0 for x in self.rows.apply(p))

    def __repr__(self):
        return f"Flat2({self.rows.data})"


class LineSpan:
    """Line spanned by two distinct point rows."""

    __slots__ = ("n", "rows")

    def __init__(self, p0, p1):
        r0, r1 = _coords(p0), _coords(p1)
        if len(r0) != len(r1):
            raise LogBundleError("spanning points of different lengths")
        m = Matrix([list(r0), list(r1)])
        if m.rank() != 2:
            raise LogBundleError("spanning points coincide")
        object.__setattr__(self, "n", len(r0) - 1)
        object.__setattr__(self, "rows", m)

    def __setattr__(self, k, v):
        raise AttributeError("LineSpan is immutable")

    def point_at(self, s, t) -> ProjPoint:
        s, t = rat(s), rat(t)
        return ProjPoint([s * a + t * b for a, b in zip(self.rows.row(0), self.rows.row(1))])

    def contains(self, point) -> bool:
        p = _coords(point, self.n)
        return Matrix(list(self.rows.data) + [list(p)]).rank() == 2

    def __repr__(self):
        return f"LineSpan({self.rows.data})"


def plucker(obj) -> Vec:
    """2x2 minors p_ij (i < j, lexicographic pairs) of the two defining rows."""
    rows = obj.rows if isinstance(obj, (Flat2, LineSpan)) else obj
    a, b = rows.row(0), rows.row(1)
    return tuple(
        a[i] * b[j] - a[j] * b[i]
        for i, j in combinations(range(len(a)), 2)
    )


def line_to_dual_flat(l: LineSpan) -> Flat2:
    """The flat of the dual space consisting of hyperplanes through l."""
    return Flat2(l.rows.row(0), l.rows.row(1))


def flat_to_dual_line(f: Flat2) -> LineSpan:
    """The dual-space line spanned by the flat's two defining forms."""
    return LineSpan(f.rows.row(0), f.rows.row(1))


def find_dependent_subset(points, n: int):
    """Smallest projectively dependent subset of size <= n+1, as indices, or None."""
    coords = [list(_coords(p, n)) for p in points]
    top = min(len(coords), n + 1)
    for size in range(2, top + 1):
        for idx in combinations(range(len(coords)), size):
            if Matrix([coords[i] for i in idx]).rank() < size:
                return idx
    return None


def general_position(points, n: int) -> bool:
    if not points:
        raise LogBundleError("empty point list")
    return find_dependent_subset(points, n) is None


def assert_general_position(points, n: int, what: str = "points"):
    bad = find_dependent_subset(points, n)
    if bad is not None:
        raise GeneralPositionError(
            f"{what} not in general position: subset {list(bad)} is dependent",
            indices=bad,
        )


def veronese(p, d: int) -> ProjPoint:
    """Degree-d Veronese image; coordinates = graded-lex monomials evaluated at p."""
    if d < 1:
        raise LogBundleError("Veronese degree must be >= 1")
    c = _coords(p)
    out = []
    for exps in graded_lex_monomials(len(c), d):
        term = Fraction(1)
        for v, e in zip(c, exps):
            term *= v ** e
        out.append(term)
    return ProjPoint(out)


def segre(p, q) -> ProjPoint:
    """Outer-product coordinates, row-major in the first factor."""
    a, b = _coords(p), _coords(q)
    return ProjPoint([x * y for x in a for y in b])


def moment_vector(n: int, s, t) -> Vec:
    s, t = rat(s), rat(t)
    return tuple(s ** (n - k) * t ** k for k in range(n + 1))


def osculating_matrix(n: int) -> Matrix:
    """D with D[k][n-k] = (-1)^k C(n,k): osculating forms of the standard curve.

    The standard curve's osculating hyperplane at (a:b) is D applied to the
    moment vector of (a:b); its k-th coefficient is (-1)^k C(n,k) a^k b^(n-k).
    """
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        rows[k][n - k] = Fraction((-1) ** k * comb(n, k))
    return Matrix(rows)


class RNC:
    """Rational normal curve gamma(s,t) = coeff . (s^n, s^(n-1) t, ..., t^n)."""

    __slots__ = ("n", "coeff")

    def __init__(self, coeff: Matrix):
        if coeff.rows != coeff.cols:
            raise LogBundleError("curve coefficient matrix must be square")
        if coeff.det() == 0:
            raise LogBundleError("curve coefficient matrix must be invertible")
        object.__setattr__(self, "n", coeff.rows - 1)
        object.__setattr__(self, "coeff", coeff)

    def __setattr__(self, k, v):
        raise AttributeError("RNC is immutable")

    @staticmethod
    def standard(n: int) -> "RNC":
        return RNC(Matrix.identity(n + 1))

    def point_at(self, s, t) -> ProjPoint:
        s, t = rat(s), rat(t)
        if s == 0 and t == 0:
            raise LogBundleError("(0,0) is not a parameter")
        return ProjPoint(self.coeff.apply(moment_vector(self.n, s, t)))

    def coordinate_forms(self) -> list[BinaryForm]:
        """Row i as the degree-n binary form giving the i-th coordinate."""
        return [BinaryForm(self.n, self.coeff.row(i)) for i in range(self.n + 1)]

    def pullback_form(self, form) -> BinaryForm:
        """The binary form (form . gamma)(s,t) of a linear form on P^n."""
        f = _coords(form, self.n)
        coeffs = [Fraction(0)] * (self.n + 1)
        for i, fi in enumerate(f):
            if fi == 0:
                continue
            for k, c in enumerate(self.coeff.row(i)):
                coeffs[k] += fi * c
        return BinaryForm(self.n, coeffs)

    def __repr__(self):
        return f"RNC(n={self.n})"


def rnc_through(points) -> RNC:
    """The unique rational normal curve through n+3 general points, n >= 2.

    Normalize so the first n+1 points are the coordinate simplex and the
    (n+2)-nd is the unit point; in that frame the curve has coordinates
    gamma_i = prod_{j != i} (s - b_j t) with b_i the reciprocal coordinates
    of the last point.  Parameters: point i sits at (b_i : 1), the unit
    partner at (1:0), the last point at (0:1).
    """
    pts = [list(_coords(p)) for p in points]
    n = len(pts[0]) - 1
    if n < 2:
        raise LogBundleError("rational normal curves need ambient dimension >= 2")
    if len(pts) != n + 3:
        raise LogBundleError(f"need exactly {n + 3} points, got {len(pts)}")
    assert_general_position(pts, n)
    base = Matrix(pts[: n + 1]).transpose()
    lam = base.solve_unique(pts[n + 1])
    # general position forces every lam_i nonzero; T maps e_i to lam_i p_i
    t_mat = Matrix([
        [lam[j] * pts[j][i] for j in range(n + 1)]
        for i in range(n + 1)
    ])
    q = t_mat.inverse().apply(pts[n + 2])
    b = [Fraction(1) / qi for qi in q]
    rows = []
    for i in range(n + 1):
        f = BinaryForm(0, [1])
        for j in range(n + 1):
            if j != i:
                f = f * BinaryForm(1, [1, -b[j]])
        rows.append(list(f.coeffs))
    curve = RNC(t_mat @ Matrix(rows))
    for p in pts:
        if point_on_rnc(curve, p) is None:
            raise LogBundleError("internal check failed: input point missed the curve")
    return curve


def point_on_rnc(c: RNC, p) -> tuple[Fraction, Fraction] | None:
    """Parameter (s:t) with gamma(s,t) = p projectively, or None."""
    y = c.coeff.inverse().apply(_coords(p, c.n))
    n = c.n
    if y[0] != 0:
        s, t = Fraction(1), y[1] / y[0]
        candidate = tuple(y[0] * t ** k for k in range(n + 1))
    else:
        s, t = Fraction(0), Fraction(1)
        candidate = tuple(Fraction(0) if k < n else y[n] for k in range(n + 1))
        if y[n] == 0:
            return None
    if tuple(y) != candidate:
        return None
    return tuple(normalize_projective((s, t)))


def dual_rnc(c: RNC) -> RNC:
    """Curve of osculating hyperplanes, parametrized compatibly with c."""
    if c.n < 2:
        raise LogBundleError("dual curve needs n >= 2")
    return RNC(c.coeff.inverse().transpose() @ osculating_matrix(c.n))
