"""Restriction to lines: splitting types, jumping tests, line transport."""

from __future__ import annotations

from fractions import Fraction

import pytest

from logbundle.arrangement import fundamental_tensor, new_arrangement
from logbundle.errors import LogBundleError
from logbundle.linalg import Matrix
from logbundle.projgeom import LineSpan, line_to_dual_flat
from logbundle.monoidal import monoidal_membership
from logbundle.quadrics import exists_quadric_containing
from logbundle.restriction import (
    connection_map,
    generic_splitting,
    is_jumping,
    is_super_jumping,
    restrict_to_line,
    splitting_type,
)
from logbundle.rng import XorShift64
from logbundle.sampling import (
    sample_arrangement,
    sample_general_points,
    sample_line,
)
from logbundle.steiner import fiber_map


def hyperplane_lines(arr):
    """For each hyperplane, lines spanned by pairs of its spanning points."""
    out = []
    for i in range(arr.m):
        kern = Matrix([list(arr.forms.row(i))], cols=arr.n + 1).right_kernel()
        for a in range(kern.rows):
            for b in range(a + 1, kern.rows):
                out.append(LineSpan(kern.row(a), kern.row(b)))
    return out


def test_generic_splitting_values():
    assert tuple(generic_splitting(2, 5)) == (1, 1)
    assert tuple(generic_splitting(2, 6)) == (2, 1)
    assert tuple(generic_splitting(2, 7)) == (2, 2)
    assert tuple(generic_splitting(3, 7)) == (1, 1, 1)
    assert tuple(generic_splitting(2, 4)) == (1, 0)


def test_restricted_pencil_matches_fiber_maps():
    arr = sample_arrangement(XorShift64(110), 2, 5)
    t = fundamental_tensor(arr)
    l = sample_line(XorShift64(111), 2)
    pencil = restrict_to_line(t, l)
    u, w = l.rows.row(0), l.rows.row(1)
    for s, t_par in [(1, 0), (0, 1), (2, 3)]:
        raw = tuple(s * a + t_par * b for a, b in zip(u, w))
        assert pencil.at(s, t_par) == fiber_map(t, raw)


def test_splitting_sums_and_reparametrization_invariance():
    rng = XorShift64(112)
    for n, m in [(2, 5), (2, 6), (3, 7)]:
        arr = sample_arrangement(XorShift64(113 + m), n, m)
        t = fundamental_tensor(arr)
        for trial in range(8):
            l = sample_line(rng, n)
            st = splitting_type(t, l)
            assert st.total() == m - n - 1
            assert len(tuple(st)) == n
            # a different spanning pair of the same line gives the same type
            a = l.point_at(1, 1 + trial)
            b = l.point_at(1, -2 - trial)
            assert splitting_type(t, LineSpan(a, b)) == st


def test_m_equals_n_plus_two_never_jumps():
    arr = sample_arrangement(XorShift64(114), 2, 4)
    t = fundamental_tensor(arr)
    rng = XorShift64(115)
    for trial in range(12):
        l = sample_line(rng, 2)
        assert tuple(splitting_type(t, l)) == (1, 0)
        assert not is_jumping(t, l)


def test_jumping_iff_dual_flat_membership():
    rng = XorShift64(116)
    arr = sample_arrangement(XorShift64(117), 2, 5)
    t = fundamental_tensor(arr)
    pts = arr.dual_points()
    hits = 0
    for trial in range(25):
        l = sample_line(rng, 2)
        member = monoidal_membership(pts, line_to_dual_flat(l))
        assert is_jumping(t, l) == member
        hits += member
    # arrangement lines always jump
    for l in hyperplane_lines(arr):
        assert is_jumping(t, l)
        assert monoidal_membership(pts, line_to_dual_flat(l))


def test_is_jumping_cross_checks_explicit_dimensions():
    arr = sample_arrangement(XorShift64(118), 2, 5)
    t = fundamental_tensor(arr)
    l = sample_line(XorShift64(119), 2)
    assert is_jumping(t, l, n=2, m=5) == is_jumping(t, l)
    with pytest.raises(LogBundleError):
        is_jumping(t, l, n=2, m=6)


def test_super_jumping_iff_quadric():
    arr = sample_arrangement(XorShift64(120), 2, 5)
    t = fundamental_tensor(arr)
    pts = arr.dual_points()
    rng = XorShift64(121)
    for trial in range(20):
        l = sample_line(rng, 2)
        assert is_super_jumping(t, l) == exists_quadric_containing(pts, line_to_dual_flat(l))
    for l in hyperplane_lines(arr):
        assert is_super_jumping(t, l)


def test_super_jumping_implies_jumping_here():
    # for five general lines the generic type is (1,1); any trivial summand jumps
    arr = sample_arrangement(XorShift64(122), 2, 5)
    t = fundamental_tensor(arr)
    for l in hyperplane_lines(arr):
        if is_super_jumping(t, l):
            assert is_jumping(t, l)


def _transport_fixture(seed):
    arr = sample_arrangement(XorShift64(seed), 2, 5)
    rng = XorShift64(seed + 1)

    def off_all(p):
        return all(arr.form(i).evaluate(p) != 0 for i in range(arr.m))

    while True:
        l = sample_line(rng, 2)
        x = l.point_at(1, 3)
        x2 = l.point_at(2, 5)
        x3 = l.point_at(1, -4)
        if off_all(x.coords) and off_all(x2.coords) and off_all(x3.coords):
            break
    lam = LineSpan(x.coords, sample_general_points(XorShift64(seed + 2), 1, 2)[0].coords)
    return arr, l, x, x2, x3, lam


def _same_line(l1: LineSpan, l2: LineSpan) -> bool:
    return l1.contains(l2.rows.row(0)) and l1.contains(l2.rows.row(1))


def test_connection_identity_and_transitivity():
    arr, l, x, x2, x3, lam = _transport_fixture(130)
    assert _same_line(connection_map(arr, l, x.coords, lam, x.coords), lam)
    lam2 = connection_map(arr, l, x.coords, lam, x2.coords)
    assert lam2.contains(x2.coords)
    lam3_direct = connection_map(arr, l, x.coords, lam, x3.coords)
    lam3_stepped = connection_map(arr, l, x2.coords, lam2, x3.coords)
    assert _same_line(lam3_direct, lam3_stepped)
    # transport backwards recovers the original direction
    back = connection_map(arr, l, x2.coords, lam2, x.coords)
    assert _same_line(back, lam)


def test_connection_validations():
    arr, l, x, x2, _x3, lam = _transport_fixture(140)
    off = sample_general_points(XorShift64(141), 1, 2)[0]
    with pytest.raises(LogBundleError):
        connection_map(arr, l, off.coords, lam, x2.coords)  # x not on l
    bad_lam = LineSpan((1, 0, 0), (0, 1, 0))
    if not bad_lam.contains(x.coords):
        with pytest.raises(LogBundleError):
            connection_map(arr, l, x.coords, bad_lam, x2.coords)
    # six lines: m != nd+1 with r = 0 is refused
    arr6 = sample_arrangement(XorShift64(142), 2, 6)
    with pytest.raises(LogBundleError):
        connection_map(arr6, l, x.coords, lam, x2.coords)


def test_splitting_needs_injective_ends():
    # a tensor that drops rank at a spanning point is refused
    bad = new_arrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)])
    t = fundamental_tensor(bad)
    ok_line = sample_line(XorShift64(143), 2)
    splitting_type(t, ok_line)  # fine on a generic line
