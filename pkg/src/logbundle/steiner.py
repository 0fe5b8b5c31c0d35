"""Steiner tensors: fibers, association, Chern data, cohomology, the binary
multiplication (Schwarzenberger) tensors, residue intertwiners, and the
isomorphism solver.

A Steiner tensor is stored as dim_v slices, each a dim_w x dim_i matrix;
slice j is the map I -> W obtained by feeding the j-th V-basis vector to the
tensor.  The bundle it presents is the cokernel of I (x) O(-1) -> W (x) O on
P^(dim_v - 1), so dim_w - dim_i = dim_v - 1 throughout (rank equals ambient
dimension).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .errors import LogBundleError
from .linalg import Matrix, Vec, is_zero_vec, normalize_projective, rat, vec
from .poly import BinaryForm, graded_lex_monomials
from .projgeom import RNC, moment_vector, osculating_matrix
from .rng import XorShift64


class SteinerTensor:
    __slots__ = ("dim_v", "dim_i", "dim_w", "slices")

    def __init__(self, slices, dim_i: int, dim_w: int):
        slices = tuple(slices)
        if not slices:
            raise LogBundleError("tensor needs at least one slice")
        for s in slices:
            if s.rows != dim_w or s.cols != dim_i:
                raise LogBundleError("slice shape mismatch")
        if dim_w - dim_i != len(slices) - 1:
            raise LogBundleError(
                f"need dim_w - dim_i = dim_v - 1, got {dim_w} - {dim_i} != {len(slices)} - 1"
            )
        object.__setattr__(self, "dim_v", len(slices))
        object.__setattr__(self, "dim_i", dim_i)
        object.__setattr__(self, "dim_w", dim_w)
        object.__setattr__(self, "slices", slices)

    def __setattr__(self, k, v):
        raise AttributeError("SteinerTensor is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SteinerTensor)
            and self.dim_i == other.dim_i
            and self.dim_w == other.dim_w
            and self.slices == other.slices
        )

    def __hash__(self):
        return hash((self.dim_i, self.dim_w, self.slices))

    def __repr__(self):
        return f"SteinerTensor(dim_v={self.dim_v}, dim_i={self.dim_i}, dim_w={self.dim_w})"


def fiber_map(t: SteinerTensor, v) -> Matrix:
    """sum_j v_j slice_j; its cokernel is the bundle fiber at [v]."""
    coords = vec(v)
    if len(coords) != t.dim_v:
        raise LogBundleError("fiber point has wrong length")
    if is_zero_vec(coords):
        raise LogBundleError("fiber point must be nonzero")
    out = Matrix.zeros(t.dim_w, t.dim_i)
    for c, s in zip(coords, t.slices):
        if c != 0:
            out = out + s.scale(c)
    return out


def injective_at(t: SteinerTensor, v) -> bool:
    return fiber_map(t, v).rank() == t.dim_i


def certify_injectivity(t: SteinerTensor, trials: int = 50, seed: int = 0) -> bool:
    """Seeded sampling certificate: False on any witnessed rank drop."""
    rng = XorShift64(seed)
    for _ in range(trials):
        while True:
            v = [Fraction(rng.rand_int(-9, 9)) for _ in range(t.dim_v)]
            if not is_zero_vec(v):
                break
        if not injective_at(t, v):
            return False
    return True


def associated_steiner(t: SteinerTensor) -> SteinerTensor:
    """Exchange the roles of V and I; involutive on the raw slice data."""
    slices = [
        Matrix(
            [[t.slices[v_idx][(w, k)] for v_idx in range(t.dim_v)] for w in range(t.dim_w)],
            cols=t.dim_v,
        )
        for k in range(t.dim_i)
    ]
    return SteinerTensor(slices, dim_i=t.dim_v, dim_w=t.dim_w)


def substitute_v(t: SteinerTensor, g: Matrix) -> SteinerTensor:
    """Rewrite the tensor in a new V-basis; column j of g holds the old
    coordinates of the new j-th basis vector."""
    if g.rows != t.dim_v or g.cols != t.dim_v:
        raise LogBundleError("basis change must be square of size dim_v")
    if g.det() == 0:
        raise LogBundleError("basis change must be invertible")
    slices = []
    for j in range(t.dim_v):
        s = Matrix.zeros(t.dim_w, t.dim_i)
        for k in range(t.dim_v):
            if g[(k, j)] != 0:
                s = s + t.slices[k].scale(g[(k, j)])
        slices.append(s)
    return SteinerTensor(slices, dim_i=t.dim_i, dim_w=t.dim_w)


def chern_coeffs(n: int, m: int) -> list[int]:
    """c_1..c_n of the logarithmic bundle: expansion of (1-ht)^-(m-n-1)."""
    if m < n + 2:
        raise LogBundleError("need m >= n+2")
    return [comb(m - n - 2 + i, i) for i in range(1, n + 1)]


def normalization_split(n: int, m: int) -> tuple[int, int]:
    """The unique (d, r) with m = nd + 1 + r and 0 <= r <= n-1."""
    if m < n + 2:
        raise LogBundleError("need m >= n+2")
    r = (m - 1) % n
    return (m - 1 - r) // n, r


def _h0_line(n: int, k: int) -> int:
    """dim H^0 of O(k) on P^n."""
    return comb(n + k, n) if k >= 0 else 0


def _multiplication_rank(slices, dim_i: int, dim_w: int, degree: int) -> int:
    """Rank of I (x) S^(degree-1) -> W (x) S^degree, (i,g) -> sum_j (slice_j i)(x_j g)."""
    if degree < 1:
        return 0
    n_vars = len(slices)
    dom = graded_lex_monomials(n_vars, degree - 1)
    tgt = graded_lex_monomials(n_vars, degree)
    tgt_index = {mon: idx for idx, mon in enumerate(tgt)}
    rows = [[Fraction(0)] * (dim_i * len(dom)) for _ in range(dim_w * len(tgt))]
    for gi, g in enumerate(dom):
        for j in range(n_vars):
            h = list(g)
            h[j] += 1
            hi = tgt_index[tuple(h)]
            s = slices[j]
            for w in range(dim_w):
                for i in range(dim_i):
                    if s[(w, i)] != 0:
                        rows[w * len(tgt) + hi][i * len(dom) + gi] += s[(w, i)]
    return Matrix(rows, cols=dim_i * len(dom)).rank()


def cohomology_dims(t: SteinerTensor, k: int) -> tuple[int, ...]:
    """(h^0, ..., h^n) of the k-th twist, from the two multiplication matrices.

    h^0 counts sections through the resolution; middle cohomology of the
    presenting line bundles vanishes, so h^q = 0 for 1 <= q <= n-2; the top
    two values come from the transposed multiplication matrix, which is the
    Serre dual of the boundary map on top cohomology.
    """
    n = t.dim_v - 1
    if n < 1:
        raise LogBundleError("need ambient dimension >= 1")
    a = -k - n - 1
    rank_mu = _multiplication_rank(t.slices, t.dim_i, t.dim_w, k)
    transposed = [s.transpose() for s in t.slices]
    rank_nu = _multiplication_rank(transposed, t.dim_w, t.dim_i, a + 1)
    h0 = t.dim_w * _h0_line(n, k) - rank_mu
    h_top_minus = t.dim_i * _h0_line(n, a + 1) - rank_nu
    h_top = t.dim_w * _h0_line(n, a) - rank_nu
    if n == 1:
        return (h0 + h_top_minus, h_top)
    return tuple([h0] + [0] * (n - 2) + [h_top_minus, h_top])


def schwarzenberger_tensor(n: int, m: int) -> SteinerTensor:
    """Multiplication tensor S^n A (x) S^(m-n-2) A -> S^(m-2) A on monomial bases.

    Slice j (multiplication by s^(n-j) t^j) is the shift matrix k -> j+k.
    """
    if m < n + 2:
        raise LogBundleError("need m >= n+2")
    dim_i, dim_w = m - n - 1, m - 1
    slices = []
    for j in range(n + 1):
        s = [[Fraction(0)] * dim_i for _ in range(dim_w)]
        for k in range(dim_i):
            s[j + k][k] = Fraction(1)
        slices.append(Matrix(s, cols=dim_i))
    return SteinerTensor(slices, dim_i=dim_i, dim_w=dim_w)


def schwarzenberger_curve(n: int) -> RNC:
    """The rational normal curve whose osculating arrangements are matched,
    without any ambient change of coordinates, by the multiplication tensor:
    the curve of n-th powers of linear forms in monomial coordinates, with
    coefficient matrix diag(binomial(n, k))."""
    rows = [
        [Fraction(comb(n, k)) if j == k else Fraction(0) for j in range(n + 1)]
        for k in range(n + 1)
    ]
    return RNC(Matrix(rows, cols=n + 1))


def residue_vector(params, form: BinaryForm) -> Vec:
    """Residues at the m marked points of the 1-form with numerator `form`
    and simple poles exactly at the points: entry i is
    -form(p_i) / prod_{j != i} l_j(p_i) with l_j the linear form vanishing
    at p_j.  Sums to zero whenever deg(form) <= m-2."""
    pts = [normalize_projective((rat(s), rat(t))) for s, t in params]
    if len(set(pts)) != len(pts):
        raise LogBundleError("marked points must be distinct")
    ells = [BinaryForm.vanishing_at(s, t) for s, t in pts]
    out = []
    for i, (s, t) in enumerate(pts):
        denom = Fraction(1)
        for j, ell in enumerate(ells):
            if j != i:
                denom *= ell.evaluate(s, t)
        out.append(-form.evaluate(s, t) / denom)
    return tuple(out)


class ResidueIntertwiner(NamedTuple):
    alpha: Matrix  # S^(m-n-2)A -> relation space, in kernel-basis coordinates
    beta: Matrix   # S^(m-2)A -> W, in the {e_l - e_m} coordinates
    v_map: Matrix  # S^nA -> V, the ambient identification determined by the curve


def build_residue_intertwiner(arr, curve: RNC, params, q) -> ResidueIntertwiner:
    """Residue-map intertwiner between the multiplication tensor and the
    arrangement's fundamental tensor, for hyperplanes osculating the curve.

    beta sends a top-degree binary form to its residue vector; alpha is the
    same residue recipe one degree block down, rescaled per point so that it
    lands in the relation space over the rationals (the per-point scale
    absorbs both the osculation scalars and the q-factor, so the output does
    not depend on q); v_map identifies S^nA with the ambient coordinates.
    The returned triple satisfies, for every j,
        beta . mult_slice_j = fiber_map(log tensor, v_map e_j) . alpha
    and this identity is rechecked at construction time.
    """
    n, m = arr.n, arr.m
    if curve.n != n:
        raise LogBundleError("curve lives in the wrong ambient space")
    if len(params) != m:
        raise LogBundleError("need one parameter per hyperplane")
    pts = [normalize_projective((rat(s), rat(t))) for s, t in params]
    if len(set(pts)) != m:
        raise LogBundleError("parameters must be distinct")
    q_pt = normalize_projective((rat(q[0]), rat(q[1])))
    if q_pt in pts:
        raise LogBundleError("q must be distinct from all marked parameters")

    d_mat = osculating_matrix(n)
    osc_map = curve.coeff.inverse().transpose() @ d_mat
    kappa = []
    for i in range(m):
        osc = osc_map.apply(moment_vector(n, *pts[i]))
        f_i = arr.forms.row(i)
        pivot = next(idx for idx, x in enumerate(osc) if x != 0)
        k_i = f_i[pivot] / osc[pivot]
        if k_i == 0 or tuple(x * k_i for x in osc) != f_i:
            raise LogBundleError(
                f"hyperplane {i} does not osculate the curve at its parameter"
            )
        kappa.append(k_i)

    ells = [BinaryForm.vanishing_at(s, t) for s, t in pts]
    denoms = []
    for i, (s, t) in enumerate(pts):
        d = Fraction(1)
        for j, ell in enumerate(ells):
            if j != i:
                d *= ell.evaluate(s, t)
        denoms.append(d)

    def residue_column(degree: int, mono_idx: int, scales) -> list[Fraction]:
        return [
            scales[i]
            * -(pts[i][0] ** (degree - mono_idx) * pts[i][1] ** mono_idx)
            / denoms[i]
            for i in range(m)
        ]

    ones = [Fraction(1)] * m
    beta_cols = [residue_column(m - 2, r, ones) for r in range(m - 1)]
    beta = Matrix(
        [[beta_cols[r][l] for r in range(m - 1)] for l in range(m - 1)],
        cols=m - 1,
    )

    inv_kappa = [1 / k_i for k_i in kappa]
    b_t = arr.kernel_basis.transpose()
    alpha_cols = []
    for k in range(m - n - 1):
        a_full = residue_column(m - n - 2, k, inv_kappa)
        coords = b_t.solve(a_full)
        if coords is None:
            raise LogBundleError("internal check failed: residue vector left the relation space")
        alpha_cols.append(coords)
    alpha = Matrix(
        [[alpha_cols[k][r] for k in range(m - n - 1)] for r in range(m - n - 1)],
        cols=m - n - 1,
    )

    v_map = curve.coeff @ d_mat.inverse().transpose()

    from .arrangement import fundamental_tensor  # local import, avoids a cycle

    log_t = fundamental_tensor(arr)
    mult_t = schwarzenberger_tensor(n, m)
    for j in range(n + 1):
        lhs = beta @ mult_t.slices[j]
        rhs = fiber_map(log_t, v_map.col(j)) @ alpha
        if lhs != rhs:
            raise LogBundleError("internal check failed: intertwining identity broke")
    return ResidueIntertwiner(alpha=alpha, beta=beta, v_map=v_map)


@dataclass(frozen=True)
class IntertwinerVerdict:
    kind: str  # "iso" | "no_hom" | "indeterminate"
    hom_dim: int
    g_i: Matrix | None = None
    g_w: Matrix | None = None

    @property
    def is_iso(self) -> bool:
        return self.kind == "iso"


def intertwiner_solve(t: SteinerTensor, t2: SteinerTensor) -> IntertwinerVerdict:
    """Solve G_W . slice_j = slice2_j . G_I for all j.

    Zero solution space: no_hom.  One-dimensional: iso when the generator
    pair is invertible, else no_hom (a nonzero non-invertible pair).  Two or
    more dimensions: indeterminate, surfaced rather than guessed at.
    """
    if t.dim_v != t2.dim_v or t.dim_i != t2.dim_i or t.dim_w != t2.dim_w:
        raise LogBundleError("tensors of different dimensions")
    di, dw = t.dim_i, t.dim_w
    n_gi = di * di
    rows = []
    for j in range(t.dim_v):
        s1, s2 = t.slices[j], t2.slices[j]
        for w2 in range(dw):
            for i1 in range(di):
                row = [Fraction(0)] * (n_gi + dw * dw)
                for i2 in range(di):
                    row[i2 * di + i1] -= s2[(w2, i2)]
                for w1 in range(dw):
                    row[n_gi + w2 * dw + w1] += s1[(w1, i1)]
                rows.append(row)
    kern = Matrix(rows, cols=n_gi + dw * dw).right_kernel()
    if kern.rows == 0:
        return IntertwinerVerdict(kind="no_hom", hom_dim=0)
    if kern.rows >= 2:
        return IntertwinerVerdict(kind="indeterminate", hom_dim=kern.rows)
    g = kern.row(0)
    g_i = Matrix([[g[i2 * di + i1] for i1 in range(di)] for i2 in range(di)], cols=di)
    g_w = Matrix(
        [[g[n_gi + w2 * dw + w1] for w1 in range(dw)] for w2 in range(dw)], cols=dw
    )
    if g_i.det() != 0 and g_w.det() != 0:
        return IntertwinerVerdict(kind="iso", hom_dim=1, g_i=g_i, g_w=g_w)
    return IntertwinerVerdict(kind="no_hom", hom_dim=1)
