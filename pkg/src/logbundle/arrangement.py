"""Hyperplane arrangements in general position and the association construction.

An arrangement stores its m forms as the rows of F; the relation space
(coefficient vectors a with sum a_i f_i = 0) is cached as the reduced
echelon kernel basis B, an (m-n-1) x m matrix with B.F = 0.
"""

from __future__ import annotations

from .errors import LogBundleError
from .linalg import Matrix
from .projgeom import (
    HyperplaneForm,
    ProjPoint,
    _coords,
    assert_general_position,
    segre,
    veronese,
)
from .steiner import SteinerTensor


class Arrangement:
    __slots__ = ("n", "m", "forms", "kernel_basis")

    def __init__(self, forms: Matrix, kernel_basis: Matrix):
        object.__setattr__(self, "n", forms.cols - 1)
        object.__setattr__(self, "m", forms.rows)
        object.__setattr__(self, "forms", forms)
        object.__setattr__(self, "kernel_basis", kernel_basis)

    def __setattr__(self, k, v):
        raise AttributeError("Arrangement is immutable")

    def form(self, i: int) -> HyperplaneForm:
        return HyperplaneForm(self.forms.row(i))

    def form_list(self) -> list[HyperplaneForm]:
        return [self.form(i) for i in range(self.m)]

    def dual_points(self) -> list[ProjPoint]:
        return [ProjPoint(self.forms.row(i)) for i in range(self.m)]

    def normalized_form_set(self):
        """Sorted tuple of normalized form coordinates; order-insensitive identity."""
        return tuple(sorted(p.coords for p in self.dual_points()))

    def __eq__(self, other):
        return (
            isinstance(other, Arrangement)
            and self.n == other.n
            and self.forms == other.forms
        )

    def __hash__(self):
        return hash(self.forms)

    def __repr__(self):
        return f"Arrangement(n={self.n}, m={self.m})"


def new_arrangement(forms) -> Arrangement:
    """Validated arrangement; rejects configurations not in general position."""
    rows = [list(_coords(f)) for f in forms]
    if not rows:
        raise LogBundleError("empty arrangement")
    n = len(rows[0]) - 1
    for r in rows:
        if len(r) != n + 1:
            raise LogBundleError("forms of mixed ambient dimension")
    assert_general_position(rows, n, what="hyperplane forms")
    f_mat = Matrix(rows, cols=n + 1)
    if f_mat.rows >= n + 2:
        kernel = f_mat.transpose().right_kernel()
    else:
        kernel = Matrix([], cols=f_mat.rows)
    return Arrangement(f_mat, kernel)


def associated(a: Arrangement) -> Arrangement:
    """Arrangement of the B-column forms on the relation space.

    For m = n+2 the target space is a single point and all forms are
    scalars: degenerate but well-defined.
    """
    if a.m <= a.n + 1:
        raise LogBundleError("association needs m >= n+2 hyperplanes")
    b = a.kernel_basis
    return new_arrangement([b.col(i) for i in range(a.m)])


def fundamental_tensor(a: Arrangement) -> SteinerTensor:
    """Steiner tensor of the arrangement's logarithmic bundle.

    Basis-free rule: t(a, v) = (a_1 f_1(v), ..., a_m f_m(v)), landing in the
    sum-zero subspace W of the m coordinates.  Realized on the kernel-basis
    coordinates of the relation space and the W basis {e_l - e_m}, so W
    coordinates are just the first m-1 entries.
    """
    if a.m <= a.n + 1:
        raise LogBundleError("fundamental tensor needs m >= n+2 hyperplanes")
    b, f = a.kernel_basis, a.forms
    slices = []
    for j in range(a.n + 1):
        slices.append(Matrix(
            [[b[(k, l)] * f[(l, j)] for k in range(b.rows)] for l in range(a.m - 1)],
            cols=b.rows,
        ))
    return SteinerTensor(slices, dim_i=a.m - a.n - 1, dim_w=a.m - 1)


def osculating_arrangement(curve, params) -> Arrangement:
    """Arrangement of the curve's osculating hyperplanes at the given parameters.

    Such arrangements are automatically in general position for distinct
    parameters; new_arrangement still re-checks.
    """
    from .projgeom import dual_rnc

    dual = dual_rnc(curve)
    return new_arrangement([dual.point_at(s, t).coords for s, t in params])


def is_associated_pair(p, q) -> bool:
    """Segre-image criterion: images dependent, every proper subset independent."""
    if len(p) != len(q):
        raise LogBundleError("point lists of different lengths")
    m = len(p)
    pts_p = [ProjPoint(x) for x in p]
    pts_q = [ProjPoint(x) for x in q]
    assert_general_position(pts_p, pts_p[0].n)
    assert_general_position(pts_q, pts_q[0].n)
    rows = [list(segre(x, y).coords) for x, y in zip(pts_p, pts_q)]
    full = Matrix(rows)
    if full.rank() != m - 1:
        return False
    for drop in range(m):
        sub = Matrix([r for i, r in enumerate(rows) if i != drop])
        if sub.rank() != m - 1:
            return False
    return True


def is_self_associated(p) -> bool:
    """Degree-2 Veronese criterion for 2n+2 points in general position."""
    pts = [ProjPoint(x) for x in p]
    n = pts[0].n
    if len(pts) != 2 * n + 2:
        raise LogBundleError(f"self-association needs {2 * n + 2} points in P^{n}")
    assert_general_position(pts, n)
    rows = [list(veronese(x, 2).coords) for x in pts]
    full = Matrix(rows)
    if full.rank() != 2 * n + 1:
        return False
    for drop in range(2 * n + 2):
        sub = Matrix([r for i, r in enumerate(rows) if i != drop])
        if sub.rank() != 2 * n + 1:
            return False
    return True
