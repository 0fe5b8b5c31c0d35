"""Exact linear algebra over the rationals.

Matrices carry Fraction entries.  Rank and determinant run fraction-free
(Bareiss) on integer-rescaled rows; reduced row echelon form and kernels run
straight Gauss-Jordan over Fraction.  Pivoting is always "first nonzero in
column order", so every result is reproducible bit for bit.

Kernel bases are the reduced echelon kernel basis: one vector per free
column, with each basis vector rescaled so its first nonzero coordinate is 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import LogBundleError

Vec = tuple[Fraction, ...]


def rat(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise LogBundleError("refusing to coerce a float to an exact rational")
    return Fraction(x)


def vec(items) -> Vec:
    return tuple(rat(x) for x in items)


def dot(u, v) -> Fraction:
    if len(u) != len(v):
        raise LogBundleError("dot product of vectors of different lengths")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vec_add(u, v) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u) -> Vec:
    c = rat(c)
    return tuple(c * a for a in u)


def is_zero_vec(u) -> bool:
    return all(a == 0 for a in u)


def _int_rows(data) -> list[list[int]]:
    # Scale each row by the lcm of denominators; row scaling preserves rank.
    out = []
    for row in data:
        m = lcm(*(e.denominator for e in row)) if row else 1
        out.append([int(e * m) for e in row])
    return out


def _bareiss_rank(m: list[list[int]]) -> int:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            mic = m[i][c]
            for j in range(c + 1, cols):
                num = m[r][c] * m[i][j] - mic * m[r][j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("inexact division in fraction-free elimination")
                m[i][j] = q
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


class Matrix:
    """Immutable rational matrix. data is a tuple of row tuples."""

    __slots__ = ("data", "rows", "cols")

    def __init__(self, data, cols: int | None = None):
        rows = tuple(tuple(rat(e) for e in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise LogBundleError("ragged matrix data")
            if cols is not None and cols != width:
                raise LogBundleError("cols argument disagrees with data")
            cols = width
        elif cols is None:
            cols = 0
        object.__setattr__(self, "data", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def identity(k: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @staticmethod
    def zeros(r: int, c: int) -> "Matrix":
        return Matrix([[0] * c for _ in range(r)], cols=c)

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> Vec:
        return self.data[i]

    def col(self, j: int) -> Vec:
        return tuple(r[j] for r in self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.data)
        return f"Matrix[{self.rows}x{self.cols}: {body}]"

    def transpose(self) -> "Matrix":
        return Matrix([self.col(j) for j in range(self.cols)], cols=self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [vec_add(a, b) for a, b in zip(self.data, other.data)], cols=self.cols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [vec_sub(a, b) for a, b in zip(self.data, other.data)], cols=self.cols
        )

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix([[c * e for e in row] for row in self.data], cols=self.cols)

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise LogBundleError("matrix shape mismatch")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise LogBundleError("matrix product shape mismatch")
        ot = other.transpose()
        return Matrix(
            [[dot(r, c) for c in ot.data] for r in self.data], cols=other.cols
        )

    def apply(self, v) -> Vec:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise LogBundleError("matrix/vector shape mismatch")
        return tuple(dot(r, v) for r in self.data)

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        try:
            return _bareiss_rank(_int_rows(self.data))
        except ArithmeticError:
            # Defensive fallback; plain exact elimination is always valid.
            return len(self.rref()[1])

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise LogBundleError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return Fraction(1)
        scale = Fraction(1)
        m = []
        for row in self.data:
            mult = lcm(*(e.denominator for e in row))
            scale *= mult
            m.append([int(e * mult) for e in row])
        sign = 1
        prev = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                sign = -sign
            for i in range(c + 1, n):
                mic = m[i][c]
                for j in range(c + 1, n):
                    num = m[c][c] * m[i][j] - mic * m[c][j]
                    q, rem = divmod(num, prev)
                    if rem:
                        raise ArithmeticError("inexact division in Bareiss determinant")
                    m[i][j] = q
                m[i][c] = 0
            prev = m[c][c]
        return Fraction(sign * m[n - 1][n - 1]) / scale

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        m = [list(row) for row in self.data]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            piv = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if piv is None:
                continue
            if piv != r:
                m[r], m[piv] = m[piv], m[r]
            pv = m[r][c]
            m[r] = [e / pv for e in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix(m, cols=self.cols), tuple(pivots)

    def right_kernel(self) -> "Matrix":
        """Basis of {x : self @ x = 0}, one row per basis vector.

        Reduced echelon kernel basis, each row rescaled to leading 1.
        """
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -red[r, f]
            lead = next(x for x in v if x != 0)
            basis.append([x / lead for x in v])
        return Matrix(basis, cols=self.cols)

    def solve(self, b) -> Vec | None:
        """A particular solution of self @ x = b (free coordinates 0), or None."""
        if len(b) != self.rows:
            raise LogBundleError("right-hand side has wrong length")
        aug = Matrix([list(row) + [bv] for row, bv in zip(self.data, b)]
                     or [], cols=self.cols + 1)
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red[r, self.cols]
        return tuple(x)

    def solve_unique(self, b) -> Vec:
        """The unique solution of self @ x = b; raises if none or many."""
        if self.rank() < self.cols:
            raise LogBundleError("linear system is underdetermined")
        x = self.solve(b)
        if x is None:
            raise LogBundleError("linear system is inconsistent")
        return x

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise LogBundleError("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix(
            [list(self.data[i]) + [1 if j == i else 0 for j in range(n)]
             for i in range(n)],
            cols=2 * n,
        )
        red, pivots = aug.rref()
        if pivots[:n] != tuple(range(n)):
            raise LogBundleError("matrix is singular")
        return Matrix([red.data[i][n:] for i in range(n)], cols=n)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise LogBundleError("hstack with different row counts")
        return Matrix(
            [list(a) + list(b) for a, b in zip(self.data, other.data)],
            cols=self.cols + other.cols,
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise LogBundleError("vstack with different column counts")
        return Matrix(list(self.data) + list(other.data), cols=self.cols)


def normalize_projective(coords) -> Vec:
    """Rescale so the first nonzero coordinate is 1. Rejects the zero vector."""
    v = vec(coords)
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        raise LogBundleError("the zero vector has no projective normalization")
    return tuple(x / lead for x in v)


def integer_primitive(coords) -> tuple[int, ...]:
    """Clear denominators and divide by content; sign fixed by first nonzero > 0."""
    v = vec(coords)
    if is_zero_vec(v):
        return tuple(0 for _ in v)
    mult = lcm(*(x.denominator for x in v))
    ints = [int(x * mult) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)
