"""Codependence determinants, monoid linear systems, and membership."""

from __future__ import annotations

from fractions import Fraction

import pytest

from logbundle.errors import LogBundleError
from logbundle.linalg import Matrix
from logbundle.monoidal import (
    codependence_matrix,
    curve_equation_p2,
    exists_quadric_through_curve_and_flat,
    membership_determinant,
    monoid_basis,
    monoid_space_dim,
    monoid_through_points,
    monoidal_membership,
    rnc_meets_flat,
)
from logbundle.poly import MultiPoly, fit_vanishing, graded_lex_monomials
from logbundle.projgeom import Flat2, rnc_through
from logbundle.rng import XorShift64
from logbundle.sampling import sample_flat, sample_general_points
from logbundle.steiner import schwarzenberger_curve

from conftest import EXAMPLE_A_FORMS


def _rand_pairs(rng: XorShift64, n: int, d: int):
    xs = [tuple(Fraction(rng.rand_int(-5, 5)) for _ in range(n)) for _ in range(n * d)]
    ys = []
    while len(ys) < n * d:
        y = (Fraction(rng.rand_int(-5, 5)), Fraction(rng.rand_int(-5, 5)))
        if y != (0, 0):
            ys.append(y)
    return xs, ys


def test_codependence_scaling_laws():
    rng = XorShift64(210)
    for n, d in [(2, 2), (2, 3), (3, 2)]:
        xs, ys = _rand_pairs(rng, n, d)
        base = codependence_matrix(xs, ys, d).determinant()
        lam = Fraction(7, 3)
        xs2 = [tuple(lam * c for c in xs[0])] + xs[1:]
        assert codependence_matrix(xs2, ys, d).determinant() == lam * base
        mu = Fraction(-5, 2)
        ys2 = [tuple(mu * c for c in ys[0])] + ys[1:]
        assert codependence_matrix(xs, ys2, d).determinant() == mu ** (d - 1) * base


def test_codependence_gl2_covariance():
    # replacing every y_i by g(y_i) multiplies the determinant by
    # det(g)^(nd(d-1)/2)
    rng = XorShift64(211)
    g = ((Fraction(2), Fraction(1)), (Fraction(1), Fraction(1)))
    det_g = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    for n, d in [(2, 2), (2, 3), (3, 2)]:
        xs, ys = _rand_pairs(rng, n, d)
        base = codependence_matrix(xs, ys, d).determinant()
        moved = [
            (g[0][0] * y[0] + g[0][1] * y[1], g[1][0] * y[0] + g[1][1] * y[1])
            for y in ys
        ]
        expect = det_g ** (n * d * (d - 1) // 2) * base
        assert codependence_matrix(xs, moved, d).determinant() == expect


def test_codependence_validation():
    with pytest.raises(LogBundleError):
        codependence_matrix([], [], 2)
    with pytest.raises(LogBundleError):
        codependence_matrix([(1, 0)], [(1, 0), (0, 1)], 2)
    with pytest.raises(LogBundleError):
        codependence_matrix([(1, 0)] * 3, [(1, 0)] * 3, 2)  # needs nd = 4
    with pytest.raises(LogBundleError):
        codependence_matrix([(1, 0)] * 4, [(1, 0)] * 4, 0)


def test_plane_curve_of_five_points_is_the_conic():
    pts = EXAMPLE_A_FORMS
    curve = curve_equation_p2(pts, 2)
    expect = MultiPoly(3, {(1, 1, 0): 3, (1, 0, 1): -4, (0, 1, 1): 1})
    assert curve == expect or curve == expect.scale(-1)
    for p in pts:
        assert curve.evaluate(p) == 0
    # cross-check against direct interpolation through the five points
    mons = graded_lex_monomials(3, 2)
    constraints = []
    for p in pts:
        constraints.append(tuple(
            p[0] ** e0 * p[1] ** e1 * p[2] ** e2 for e0, e1, e2 in mons
        ))
    fitted = fit_vanishing(3, 2, constraints)
    assert len(fitted) == 1
    f = fitted[0].integer_normalized()
    assert curve == f or curve == f.scale(-1)


def test_membership_matches_curve_and_ignores_point_order():
    pts = list(EXAMPLE_A_FORMS)
    on = Flat2((3, -1, 0), (9, 0, -1))     # the point (1:3:9), on the conic
    off = Flat2((1, -1, 0), (2, 0, -1))    # the point (1:1:2), off it
    assert monoidal_membership(pts, on)
    assert not monoidal_membership(pts, off)
    reordered = [pts[i] for i in (4, 2, 0, 3, 1)]
    assert monoidal_membership(reordered, on)
    assert not monoidal_membership(reordered, off)


def test_determinant_vanishes_on_flats_through_a_point():
    pts = list(EXAMPLE_A_FORMS)
    # flat = the point (1:1:1) = pts[3]; the paired row degenerates
    z = Flat2((1, -1, 0), (1, 0, -1))
    assert membership_determinant(pts, z) == 0


def test_curve_equation_validation():
    pts = EXAMPLE_A_FORMS
    with pytest.raises(LogBundleError):
        curve_equation_p2(pts[:4])
    with pytest.raises(LogBundleError):
        curve_equation_p2(pts, 3)
    with pytest.raises(LogBundleError):
        curve_equation_p2([(1, 0), (0, 1), (1, 1)], 1)


def test_degree_seven_curve_has_double_points():
    pts = [p.coords for p in sample_general_points(XorShift64(212), 7, 2, bound=4)]
    curve = curve_equation_p2(pts, 3)
    assert curve.degree() == 6
    assert curve.is_homogeneous()
    for p in pts:
        assert curve.evaluate(p) == 0
        for var in range(3):
            assert curve.partial(var).evaluate(p) == 0


def test_monoid_space_dims():
    assert monoid_space_dim(2, 2, 2) == 4
    assert monoid_space_dim(2, 3, 2) == 6
    assert monoid_space_dim(3, 2, 2) == 6
    assert monoid_space_dim(3, 3, 2) == 9
    assert monoid_space_dim(3, 2, 3) == 8
    assert monoid_space_dim(3, 3, 3) == 15
    for n in (2, 3):
        for d in (2, 3):
            assert monoid_space_dim(n, d, 2) == n * d
    with pytest.raises(LogBundleError):
        monoid_space_dim(2, 1, 2)
    with pytest.raises(LogBundleError):
        monoid_space_dim(3, 2, 4)


def test_monoid_basis_dimensions_and_vanishing():
    rng = XorShift64(213)
    for n in (2, 3):
        for d in (2, 3):
            z = sample_flat(rng, n)
            basis = monoid_basis(z, d)
            assert len(basis) == monoid_space_dim(n, d, 2) + 1
            param = z.rows.right_kernel()
            for b in basis:
                assert b.degree() == d
                # order d-1 along the flat: value and, for d = 3, gradient
                for s, t in [(1, 0), (0, 1), (1, 1), (2, -3)]:
                    if param.rows == 1:
                        p = tuple(param.row(0))
                    else:
                        p = tuple(
                            s * a + t * c for a, c in zip(param.row(0), param.row(1))
                        )
                    assert b.evaluate(p) == 0
                    if d == 3:
                        for var in range(n + 1):
                            assert b.partial(var).evaluate(p) == 0


def test_monoid_basis_codimension_three():
    # a point of P^3, cut out by three independent forms
    z_rows = [(1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1)]  # the point (1:1:1:1)
    for d in (2, 3):
        basis = monoid_basis(z_rows, d)
        assert len(basis) == monoid_space_dim(3, d, 3) + 1
        for b in basis:
            assert b.evaluate((1, 1, 1, 1)) == 0
            if d == 3:
                for var in range(4):
                    assert b.partial(var).evaluate((1, 1, 1, 1)) == 0


def test_monoid_through_points():
    z = Flat2((1, 0, 0, -1), (0, 1, -1, 0))
    pts = [p.coords for p in sample_general_points(XorShift64(214), 5, 3, bound=4)]
    f = monoid_through_points(z, 2, pts)
    assert f is not None
    for p in pts:
        assert f.evaluate(p) == 0
    param = z.rows.right_kernel()
    for s, t in [(1, 0), (0, 1), (2, 5)]:
        on_flat = tuple(s * a + t * c for a, c in zip(param.row(0), param.row(1)))
        assert f.evaluate(on_flat) == 0


def test_rnc_flat_incidence_matches_quadric_criterion():
    curve = schwarzenberger_curve(3)
    rng = XorShift64(215)
    met = 0
    for trial in range(50):
        z = sample_flat(rng, 3)
        assert rnc_meets_flat(curve, z) == exists_quadric_through_curve_and_flat(curve, z)
        met += rnc_meets_flat(curve, z)
    # force incidence: flats through a curve point must register on both sides
    for s, t in [(1, 2), (1, -1), (3, 1), (0, 1), (1, 0)]:
        p = curve.point_at(s, t)
        kern = Matrix([list(p.coords)], cols=4).right_kernel()
        z = Flat2(kern.row(0), kern.row(1))
        assert rnc_meets_flat(curve, z)
        assert exists_quadric_through_curve_and_flat(curve, z)
        z2 = Flat2(kern.row(1), kern.row(2))
        assert rnc_meets_flat(curve, z2)
        assert exists_quadric_through_curve_and_flat(curve, z2)


def test_rnc_flat_incidence_other_curve():
    pts = [p.coords for p in sample_general_points(XorShift64(216), 6, 3, bound=4)]
    curve = rnc_through(pts)
    rng = XorShift64(217)
    for trial in range(20):
        z = sample_flat(rng, 3)
        assert rnc_meets_flat(curve, z) == exists_quadric_through_curve_and_flat(curve, z)
