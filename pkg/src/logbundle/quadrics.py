"""Linear systems of quadrics through points, flats and curves; condition
counts; adjoint-point sampling; Castelnuovo detection; and the two-arrangement
classifier with its mandatory cross-validation against the tensor solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ClassifierInconsistencyError, LogBundleError
from .linalg import Matrix, rat
from .poly import MultiPoly, graded_lex_monomials
from .projgeom import (
    RNC,
    Flat2,
    ProjPoint,
    _coords,
    assert_general_position,
    point_on_rnc,
    rnc_through,
    veronese,
)
from .rng import XorShift64


class QuadraticForm:
    """Quadric as a symmetric matrix; kept in sync with the graded-lex
    coefficient vector convention used by the linear systems below."""

    __slots__ = ("n", "gram")

    def __init__(self, gram: Matrix):
        if gram.rows != gram.cols or gram != gram.transpose():
            raise LogBundleError("gram matrix must be square and symmetric")
        object.__setattr__(self, "n", gram.rows - 1)
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, k, v):
        raise AttributeError("QuadraticForm is immutable")

    @staticmethod
    def from_coeff_vector(n: int, coeffs) -> "QuadraticForm":
        mons = graded_lex_monomials(n + 1, 2)
        coeffs = [rat(c) for c in coeffs]
        if len(coeffs) != len(mons):
            raise LogBundleError("coefficient vector has wrong length")
        rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
        for c, exps in zip(coeffs, mons):
            idx = [i for i, e in enumerate(exps) for _ in range(e)]
            i, j = idx[0], idx[1]
            if i == j:
                rows[i][i] = c
            else:
                rows[i][j] = rows[j][i] = c / 2
        return QuadraticForm(Matrix(rows))

    def evaluate(self, point) -> Fraction:
        p = _coords(point, self.n)
        gp = self.gram.apply(p)
        return sum((a * b for a, b in zip(p, gp)), Fraction(0))

    def to_poly(self) -> MultiPoly:
        terms = {}
        for i in range(self.n + 1):
            for j in range(i, self.n + 1):
                exps = [0] * (self.n + 1)
                exps[i] += 1
                exps[j] += 1
                c = self.gram[(i, j)] if i == j else 2 * self.gram[(i, j)]
                if c != 0:
                    terms[tuple(exps)] = c
        return MultiPoly(self.n + 1, terms)


def quadric_point_row(point) -> list[Fraction]:
    """Evaluation functional of the degree-2 monomials at the point."""
    return list(veronese(point, 2).coords)


def quadric_flat_rows(flat_rows: Matrix) -> list[list[Fraction]]:
    """Conditions on a quadric's coefficients for containing the flat cut
    out by the given independent form rows (any codimension)."""
    n_amb = flat_rows.cols - 1
    if flat_rows.rank() != flat_rows.rows:
        raise LogBundleError("flat rows must be independent")
    param = flat_rows.right_kernel()  # rows span the flat
    if param.rows == 0:
        return []
    images = [list(param.col(i)) for i in range(n_amb + 1)]
    mons2 = graded_lex_monomials(n_amb + 1, 2)
    u_mons = graded_lex_monomials(param.rows, 2)
    rows = [[Fraction(0)] * len(mons2) for _ in range(len(u_mons))]
    for col, exps in enumerate(mons2):
        restricted = MultiPoly.monomial(n_amb + 1, exps).substitute_linear(images)
        for r, um in enumerate(u_mons):
            rows[r][col] = restricted.terms.get(um, Fraction(0))
    return rows


def quadric_curve_rows(c: RNC) -> list[list[Fraction]]:
    """Conditions for a quadric to contain the curve: the pulled-back binary
    form of degree 2n vanishes coefficientwise."""
    n = c.n
    coord_forms = c.coordinate_forms()
    mons2 = graded_lex_monomials(n + 1, 2)
    rows = [[Fraction(0)] * len(mons2) for _ in range(2 * n + 1)]
    for col, exps in enumerate(mons2):
        idx = [i for i, e in enumerate(exps) for _ in range(e)]
        pulled = coord_forms[idx[0]] * coord_forms[idx[1]]
        for r in range(2 * n + 1):
            rows[r][col] = pulled.coeffs[r]
    return rows


def conditions_imposed(points) -> int:
    """Rank of the degree-2 evaluation matrix: codimension of the system of
    quadrics through the points."""
    return Matrix([quadric_point_row(p) for p in points]).rank()


def exists_quadric_containing(points, z: Flat2) -> bool:
    rows = [quadric_point_row(p) for p in points]
    rows.extend(quadric_flat_rows(z.rows))
    n_amb = z.n
    kern = Matrix(rows, cols=len(graded_lex_monomials(n_amb + 1, 2))).right_kernel()
    return kern.rows > 0


def sample_flat_through(rng: XorShift64, q, bound: int = 9) -> Flat2:
    """Seeded random codimension-2 flat through the point q: two independent
    random forms, each corrected to vanish at q."""
    coords = _coords(q)
    pivot = next(i for i, x in enumerate(coords) if x != 0)
    rows = []
    while len(rows) < 2:
        raw = [Fraction(rng.rand_int(-bound, bound)) for _ in coords]
        val = sum((a * b for a, b in zip(raw, coords)), Fraction(0))
        raw[pivot] -= val / coords[pivot]
        if all(x == 0 for x in raw):
            continue
        if rows and Matrix([rows[0], raw]).rank() != 2:
            continue
        rows.append(raw)
    return Flat2(rows[0], rows[1])


def adjoint_witness(points, q, trials: int = 50, seed: int = 0):
    """A sampled flat through q that extends to no common quadric, or None
    if every trial admitted one."""
    pts = [ProjPoint(p) for p in points]
    q_pt = ProjPoint(q)
    if q_pt in pts:
        raise LogBundleError("q must be distinct from all the points")
    rng = XorShift64(seed)
    for _ in range(trials):
        z = sample_flat_through(rng, q_pt)
        if not exists_quadric_containing(pts, z):
            return z
    return None


def is_adjoint_sampled(points, q, trials: int = 50, seed: int = 0) -> bool:
    """Necessary-condition sampling for adjointness of q: every sampled flat
    through q must extend to a quadric through all the points."""
    return adjoint_witness(points, q, trials=trials, seed=seed) is None


def castelnuovo_rnc(points):
    """The rational normal curve forced by a low condition count, or None.

    For m >= 2n+3 points in general position imposing <= 2n+1 conditions on
    quadrics, the curve through the first n+3 points must contain the rest;
    this is verified rather than assumed."""
    pts = [ProjPoint(p) for p in points]
    n = pts[0].n
    if len(pts) < 2 * n + 3:
        raise LogBundleError(f"need at least {2 * n + 3} points")
    assert_general_position(pts, n)
    if conditions_imposed(pts) > 2 * n + 1:
        return None
    curve = rnc_through(pts[: n + 3])
    for p in pts[n + 3:]:
        if point_on_rnc(curve, p) is None:
            return None
    return curve


@dataclass(frozen=True)
class TorelliVerdict:
    kind: str  # "same_arrangement" | "common_veronese_curve" | "non_isomorphic"
    curve: RNC | None
    solver: object  # IntertwinerVerdict of the fundamental tensors


def torelli_classify(a1, a2) -> TorelliVerdict:
    """Classify two arrangements: equal as sets, dual points on one common
    rational normal curve, or non-isomorphic.

    The geometric verdict is always cross-validated against the intertwiner
    solver on the fundamental tensors; any disagreement raises
    ClassifierInconsistencyError instead of guessing.
    """
    from .arrangement import fundamental_tensor
    from .steiner import intertwiner_solve

    if a1.n != a2.n or a1.m != a2.m:
        raise LogBundleError("arrangements must share n and m")
    if a1.m < 2 * a1.n + 3:
        raise LogBundleError(
            f"classification needs m >= 2n+3 = {2 * a1.n + 3} hyperplanes"
        )
    curve = None
    if a1.normalized_form_set() == a2.normalized_form_set():
        kind = "same_arrangement"
    else:
        c = castelnuovo_rnc(a1.dual_points())
        if c is not None and all(
            point_on_rnc(c, p) is not None for p in a2.dual_points()
        ):
            kind = "common_veronese_curve"
            curve = c
        else:
            kind = "non_isomorphic"
    solver = intertwiner_solve(fundamental_tensor(a1), fundamental_tensor(a2))
    expected = "no_hom" if kind == "non_isomorphic" else "iso"
    if solver.kind != expected:
        raise ClassifierInconsistencyError(
            f"geometric verdict {kind} expected solver {expected}, got "
            f"{solver.kind} (hom space dimension {solver.hom_dim})"
        )
    return TorelliVerdict(kind=kind, curve=curve, solver=solver)
