"""Seeded samplers for test geometry.  Every draw flows through the
documented XorShift64 stream, so identical seeds reproduce identical
configurations everywhere."""

from __future__ import annotations

from fractions import Fraction

from .arrangement import Arrangement, new_arrangement
from .errors import LogBundleError
from .linalg import is_zero_vec
from .projgeom import RNC, Flat2, LineSpan, ProjPoint, general_position
from .rng import XorShift64


def sample_coords(rng: XorShift64, length: int, bound: int = 9) -> list[Fraction]:
    while True:
        v = [Fraction(rng.rand_int(-bound, bound)) for _ in range(length)]
        if not is_zero_vec(v):
            return v


def sample_point(rng: XorShift64, n: int, bound: int = 9) -> ProjPoint:
    return ProjPoint(sample_coords(rng, n + 1, bound))


def sample_general_points(
    rng: XorShift64, count: int, n: int, bound: int = 9, max_attempts: int = 10000
) -> list[ProjPoint]:
    for _ in range(max_attempts):
        pts = [sample_point(rng, n, bound) for _ in range(count)]
        if len(set(pts)) == count and general_position(pts, n):
            return pts
    raise LogBundleError("sampling failed to reach general position")


def sample_arrangement(rng: XorShift64, n: int, m: int, bound: int = 9) -> Arrangement:
    return new_arrangement([p.coords for p in sample_general_points(rng, m, n, bound)])


def sample_line(rng: XorShift64, n: int, bound: int = 9) -> LineSpan:
    while True:
        a = sample_coords(rng, n + 1, bound)
        b = sample_coords(rng, n + 1, bound)
        try:
            return LineSpan(a, b)
        except LogBundleError:
            continue


def sample_flat(rng: XorShift64, n: int, bound: int = 9) -> Flat2:
    while True:
        a = sample_coords(rng, n + 1, bound)
        b = sample_coords(rng, n + 1, bound)
        try:
            return Flat2(a, b)
        except LogBundleError:
            continue


def sample_params(rng: XorShift64, count: int, bound: int = 50) -> list[tuple[Fraction, Fraction]]:
    """Distinct parameters on the projective line, all affine (t = 1)."""
    seen: list[tuple[Fraction, Fraction]] = []
    while len(seen) < count:
        p = (Fraction(rng.rand_int(-bound, bound)), Fraction(1))
        if p not in seen:
            seen.append(p)
    return seen


def points_on_curve(curve: RNC, params) -> list[ProjPoint]:
    return [curve.point_at(s, t) for s, t in params]
