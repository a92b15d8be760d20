from __future__ import annotations

from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from arrgroups.arrangement import CONIC_POINTS, TANGENT_LINES, builtin, build_lattice
from arrgroups.exactgeom import (Conic, DuplicateLines, DuplicatePoints, IdenticalLines, ProjLine,
                                 ProjPoint, apply_to_line, apply_to_point, collinear3, conic_through,
                                 det3, line_intersection, line_through, lines_tangent_common_conic,
                                 primitive, six_points_on_common_conic)


def test_primitive_normalisation():
    assert primitive((2, -4, 6)) == (1, -2, 3)
    assert primitive((0, -3, 6)) == (0, 1, -2)
    assert primitive((Fraction(1, 2), Fraction(1, 3), 0)) == (3, 2, 0)
    assert primitive(("-1/2", "1", "0")) == (1, -2, 0)
    with pytest.raises(ValueError):
        primitive((0, 0, 0))


def test_points_and_lines_are_projective_classes():
    assert ProjPoint(1, 2, 3) == ProjPoint(-2, -4, -6)
    assert ProjLine(0, 2, 2) == ProjLine(0, 1, 1)
    assert ProjPoint(1, 2, 4).affine() == (Fraction(1, 4), Fraction(1, 2))
    assert ProjPoint(1, 1, 0).affine() is None


def test_intersection_and_join():
    p = line_intersection(ProjLine(1, 0, 0), ProjLine(0, 1, 0))
    assert p == ProjPoint(0, 0, 1)
    # parallel affine lines meet at infinity
    assert line_intersection(ProjLine(0, 1, 0), ProjLine(0, 1, -1)) == ProjPoint(1, 0, 0)
    with pytest.raises(IdenticalLines):
        line_intersection(ProjLine(1, 1, 1), ProjLine(2, 2, 2))
    assert line_through(ProjPoint(0, 0, 1), ProjPoint(1, 1, 1)) == ProjLine(1, -1, 0)
    with pytest.raises(DuplicatePoints):
        line_through(ProjPoint(1, 2, 3), ProjPoint(2, 4, 6))


def test_collinear():
    assert collinear3(ProjPoint(0, 0, 1), ProjPoint(1, 1, 1), ProjPoint(2, 2, 1))
    assert not collinear3(ProjPoint(0, 0, 1), ProjPoint(1, 0, 1), ProjPoint(0, 1, 1))


def test_conic_through_points_on_unit_circle():
    circle = Conic.from_coefficients(1, 0, 1, 0, 0, -1)
    pts = [ProjPoint(1, 0, 1), ProjPoint(0, 1, 1), ProjPoint(-1, 0, 1), ProjPoint(0, -1, 1),
           ProjPoint(3, 4, 5), ProjPoint(-3, 4, 5)]
    assert all(circle.contains(p) for p in pts)
    assert six_points_on_common_conic(pts)
    ok, conic = six_points_on_common_conic(pts, witness=True)
    assert ok and conic.is_smooth() and all(conic.contains(p) for p in pts)
    assert not six_points_on_common_conic(pts[:5] + [ProjPoint(2, 0, 1)])


def test_degenerate_conics_are_rejected():
    # six points on the line pair xy = 0 lie only on singular conics
    pts = [ProjPoint(1, 0, 1), ProjPoint(2, 0, 1), ProjPoint(3, 0, 1),
           ProjPoint(0, 1, 1), ProjPoint(0, 2, 1), ProjPoint(0, 3, 1)]
    assert conic_through(pts) is None
    assert not six_points_on_common_conic(pts)


def test_duplicates_raise():
    p = ProjPoint(1, 0, 1)
    with pytest.raises(DuplicatePoints):
        six_points_on_common_conic([p, p, ProjPoint(0, 1, 1), ProjPoint(1, 1, 1),
                                    ProjPoint(2, 1, 1), ProjPoint(1, 2, 1)])
    l = ProjLine(1, 0, 0)
    with pytest.raises(DuplicateLines):
        lines_tangent_common_conic([l, l, ProjLine(0, 1, 0), ProjLine(1, 1, 1),
                                    ProjLine(1, 2, 1), ProjLine(2, 1, 1)])


def test_tangent_lines_of_circle():
    circle = Conic.from_coefficients(1, 0, 1, 0, 0, -1)
    # tangent to x^2 + y^2 = z^2 at (a:b:c) is a x + b y - c z = 0
    touch = [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1), (3, 4, 5), (-3, 4, 5)]
    lines = [ProjLine(a, b, -c) for a, b, c in touch]
    assert all(circle.tangent_to(l) for l in lines)
    ok, conic = lines_tangent_common_conic(lines, witness=True)
    assert ok and all(conic.tangent_to(l) for l in lines)
    assert not lines_tangent_common_conic(lines[:5] + [ProjLine(1, 0, 0)])


def test_concurrent_lines_have_no_smooth_tangent_conic():
    lines = [ProjLine(1, k, 0) for k in range(6)]
    assert not lines_tangent_common_conic(lines)


matrices = st.lists(st.integers(-4, 4), min_size=9, max_size=9).map(
    lambda v: (tuple(v[0:3]), tuple(v[3:6]), tuple(v[6:9]))).filter(lambda m: det3(m) != 0)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_certificates_are_projectively_invariant(m):
    for name, expected in (("A+", True), ("A-", False)):
        arr = builtin(name)
        lat = build_lattice(arr)
        pts = [apply_to_point(m, lat.point(*t)) for t in CONIC_POINTS]
        assert six_points_on_common_conic(pts) is expected
        lines = [apply_to_line(m, arr.line(k)) for k in TANGENT_LINES]
        assert lines_tangent_common_conic(lines) is expected


@settings(max_examples=60, deadline=None)
@given(matrices, st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
                          .filter(any), min_size=3, max_size=3))
def test_incidence_is_preserved_by_transforms(m, raw):
    p, q, r = (ProjPoint(c) for c in raw)
    assert collinear3(p, q, r) == collinear3(*(apply_to_point(m, x) for x in (p, q, r)))
    l = ProjLine(raw[0])
    assert l.contains(r) == apply_to_line(m, l).contains(apply_to_point(m, r))
