"""Restriction of Steiner tensors to lines: pencils, splitting types, jumping
tests, and the projective connection carried by a non-jumping line.

The splitting type is read off section counts of the dual kernel
presentation: with pencil T(s,t) = s T0 + t T1, the kernel of
W* (x) Bin_k -> I* (x) Bin_(k+1), w (x) g -> (T^t w) g, has dimension
h_k = sum over a_i <= k of (k+1-a_i), so consecutive differences count
#{i : a_i <= k}.  Only ranks of exact matrices are ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LogBundleError, NonUniquePsiError
from .linalg import Matrix, is_zero_vec, normalize_projective, rat, vec
from .poly import BinaryForm
from .projgeom import LineSpan, ProjPoint, _coords
from .steiner import SteinerTensor, fiber_map, normalization_split


@dataclass(frozen=True)
class MatrixPencil:
    t0: Matrix
    t1: Matrix
    span: LineSpan

    def at(self, s, t) -> Matrix:
        return self.t0.scale(s) + self.t1.scale(t)


@dataclass(frozen=True)
class SplittingType:
    """Multiset (a_1 >= ... >= a_n) with E restricted to the line = + O(a_i)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries, reverse=True)))
        if any(a < 0 for a in self.entries):
            raise LogBundleError("splitting entries must be nonnegative")

    def __iter__(self):
        return iter(self.entries)

    def total(self) -> int:
        return sum(self.entries)


def generic_splitting(n: int, m: int) -> SplittingType:
    d, r = normalization_split(n, m)
    return SplittingType((d,) * r + (d - 1,) * (n - r))


def restrict_to_line(t: SteinerTensor, l: LineSpan) -> MatrixPencil:
    if l.n != t.dim_v - 1:
        raise LogBundleError("line lives in the wrong ambient space")
    return MatrixPencil(
        t0=fiber_map(t, l.rows.row(0)),
        t1=fiber_map(t, l.rows.row(1)),
        span=l,
    )


def _check_injective_ends(pencil: MatrixPencil):
    for idx, mat in ((0, pencil.t0), (1, pencil.t1)):
        if mat.rank() != mat.cols:
            raise LogBundleError(
                f"fiber map drops rank at spanning point {idx}; splitting type undefined"
            )


def _phi_kernel_dim(pencil: MatrixPencil, k: int) -> int:
    """dim ker of W* (x) Bin_k -> I* (x) Bin_(k+1) for the pencil."""
    t0, t1 = pencil.t0, pencil.t1
    dim_w, dim_i = t0.rows, t0.cols
    rows = [[Fraction(0)] * (dim_w * (k + 1)) for _ in range(dim_i * (k + 2))]
    for w in range(dim_w):
        for e in range(k + 1):
            col = w * (k + 1) + e
            for i in range(dim_i):
                rows[i * (k + 2) + e][col] += t0[(w, i)]
                rows[i * (k + 2) + e + 1][col] += t1[(w, i)]
    return dim_w * (k + 1) - Matrix(rows, cols=dim_w * (k + 1)).rank()


def splitting_type(t: SteinerTensor, l: LineSpan) -> SplittingType:
    pencil = restrict_to_line(t, l)
    _check_injective_ends(pencil)
    n = t.dim_v - 1
    # entries sum to dim_i, so no entry can exceed it
    c1 = t.dim_i
    entries: list[int] = []
    prev_h = 0
    prev_c = 0
    for k in range(c1 + 1):
        h_k = _phi_kernel_dim(pencil, k)
        c_k = h_k - prev_h
        if c_k < prev_c:
            raise LogBundleError("internal check failed: section counts decreased")
        entries.extend([k] * (c_k - prev_c))
        if c_k == n:
            return SplittingType(tuple(entries))
        prev_h, prev_c = h_k, c_k
    raise LogBundleError("internal check failed: splitting type did not terminate")


def is_jumping(t: SteinerTensor, l: LineSpan, n: int | None = None, m: int | None = None) -> bool:
    """Splitting type differs from the generic (d^r, (d-1)^(n-r)).

    n and m are derived from the tensor shape; explicit values are accepted
    and cross-checked.
    """
    derived_n, derived_m = t.dim_v - 1, t.dim_w + 1
    if n is not None and n != derived_n:
        raise LogBundleError(f"n={n} inconsistent with tensor (dim_v={t.dim_v})")
    if m is not None and m != derived_m:
        raise LogBundleError(f"m={m} inconsistent with tensor (dim_w={t.dim_w})")
    return splitting_type(t, l) != generic_splitting(derived_n, derived_m)


def is_super_jumping(t: SteinerTensor, l: LineSpan) -> bool:
    """True iff 0 occurs in the splitting type: the restricted dual has a section."""
    pencil = restrict_to_line(t, l)
    _check_injective_ends(pencil)
    return _phi_kernel_dim(pencil, 0) > 0


def _line_parameter(l: LineSpan, p) -> tuple[Fraction, Fraction]:
    coords = _coords(p, l.n)
    st = l.rows.transpose().solve(coords)
    if st is None:
        raise LogBundleError("point does not lie on the line")
    return st[0], st[1]


def _meet_hyperplane(l: LineSpan, form) -> tuple[Fraction, Fraction]:
    """Parameter of l's intersection with the hyperplane, as (s:t)."""
    f = vec(form)
    u, w = l.rows.row(0), l.rows.row(1)
    fu = sum((a * b for a, b in zip(f, u)), Fraction(0))
    fw = sum((a * b for a, b in zip(f, w)), Fraction(0))
    if fu == 0 and fw == 0:
        raise LogBundleError("line lies inside the hyperplane")
    return fw, -fu


def psi_finder(params, targets, degree: int, anchor=None) -> list[tuple[BinaryForm, ...]]:
    """Basis of n-tuples of degree-`degree` binary forms psi with
    targets[i] . psi(params[i]) = 0 for all i, plus the optional anchor
    condition psi(anchor_param) proportional to anchor_point.

    Targets and the anchor point are vectors of the same length n; the
    result is empty exactly when no such map exists.
    """
    if len(params) != len(targets):
        raise LogBundleError("one target per parameter required")
    pts = [normalize_projective((rat(s), rat(t))) for s, t in params]
    if len(set(pts)) != len(pts):
        raise LogBundleError("parameters must be distinct")
    n = len(vec(targets[0])) if targets else (len(vec(anchor[1])) if anchor else 0)
    if n == 0:
        raise LogBundleError("cannot infer the target dimension")
    width = degree + 1
    rows = []
    for (s, t), target in zip(pts, targets):
        tv = vec(target)
        if len(tv) != n:
            raise LogBundleError("targets of mixed dimension")
        mom = [s ** (degree - e) * t ** e for e in range(width)]
        rows.append([tv[c] * mom[e] for c in range(n) for e in range(width)])
    if anchor is not None:
        (s, t), point = anchor
        s, t = rat(s), rat(t)
        pv = vec(point)
        if len(pv) != n:
            raise LogBundleError("anchor point has the wrong dimension")
        mom = [s ** (degree - e) * t ** e for e in range(width)]
        for a in range(n):
            for b in range(a + 1, n):
                row = [Fraction(0)] * (n * width)
                for e in range(width):
                    row[a * width + e] += pv[b] * mom[e]
                    row[b * width + e] -= pv[a] * mom[e]
                rows.append(row)
    kern = Matrix(rows, cols=n * width).right_kernel()
    out = []
    for r in range(kern.rows):
        flat = kern.row(r)
        out.append(tuple(
            BinaryForm(degree, flat[c * width:(c + 1) * width]) for c in range(n)
        ))
    return out


def connection_map(arr, l: LineSpan, x, lam: LineSpan, x2) -> LineSpan:
    """Transport of the line lam through x to a line through x2, along the
    canonical projective connection of a non-jumping line l.

    Requires m = nd+1 hyperplanes; the last one acts as the screen.  The
    degree-d map psi from l to the screen is pinned down by the incidence
    conditions at the nd intersection parameters and by psi(x) = lam's
    intersection with the screen; its value at x2 spans the answer."""
    x_pt, x2_pt = ProjPoint(x), ProjPoint(x2)
    if not l.contains(x_pt) or not l.contains(x2_pt):
        raise LogBundleError("x and x2 must lie on the line")
    if not lam.contains(x_pt):
        raise LogBundleError("lam must pass through x")
    for i in range(arr.m):
        fi = arr.forms.row(i)
        for p in (x_pt, x2_pt):
            if sum((a * b for a, b in zip(fi, p.coords)), Fraction(0)) == 0:
                raise LogBundleError("x and x2 must avoid every hyperplane")
    if arr.m == 1:
        s, t = _meet_hyperplane(lam, arr.forms.row(0))
        z = lam.point_at(s, t)
        return LineSpan(x2_pt.coords, z.coords)
    n = arr.n
    d, r = normalization_split(n, arr.m)
    if r != 0:
        raise LogBundleError("connection needs m = nd+1 hyperplanes")
    screen = arr.forms.row(arr.m - 1)
    screen_basis = Matrix([list(screen)], cols=n + 1).right_kernel()  # n x (n+1)
    params = []
    targets = []
    for i in range(arr.m - 1):
        fi = arr.forms.row(i)
        params.append(_meet_hyperplane(l, fi))
        targets.append(tuple(
            sum((a * b for a, b in zip(fi, screen_basis.row(c))), Fraction(0))
            for c in range(n)
        ))
    sz, tz = _meet_hyperplane(lam, screen)
    z = lam.point_at(sz, tz)
    z_coords = screen_basis.transpose().solve(list(z.coords))
    if z_coords is None:
        raise LogBundleError("internal check failed: screen point left the screen")
    anchor = (_line_parameter(l, x_pt), tuple(z_coords))
    maps = psi_finder(params, targets, d, anchor=anchor)
    if len(maps) != 1:
        raise NonUniquePsiError(
            f"connection map solution space has dimension {len(maps)}; "
            "the line is jumping or the data degenerate"
        )
    psi = maps[0]
    s2, t2 = _line_parameter(l, x2_pt)
    value = [f.evaluate(s2, t2) for f in psi]
    image = [
        sum((value[c] * screen_basis[(c, j)] for c in range(n)), Fraction(0))
        for j in range(n + 1)
    ]
    if is_zero_vec(image):
        raise LogBundleError("internal check failed: connection image vanished")
    return LineSpan(x2_pt.coords, image)
