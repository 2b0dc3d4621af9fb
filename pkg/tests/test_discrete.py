import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from symcurve import (
    DegenerateError,
    DiscreteCurve,
    Isometry2,
    apply,
    brute_force_group,
    detect,
    detect_symmetry_group,
    filtered_interpolants,
    interpolant,
    laplacian_smooth,
    prune_collinear,
    verify_on_vertices,
)
from symcurve.discrete import brute_force_symmetries, match_vertices, smoothing_matrix
from symcurve.shapes import orbit_polyline, planted_polyline, random_arc, regular_polygon
from symcurve.symmetry import satisfies_identity
from symcurve.trig_curve import classify_all

from conftest import isometries, polylines

SQUARE = np.array([[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]])


def test_prune_examples():
    with_mid = np.array([[1.0, 1.0], [0.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]])
    assert np.array_equal(prune_collinear(with_mid).vertices, SQUARE)
    tri = regular_polygon(3)
    assert np.array_equal(prune_collinear(tri).vertices, tri)
    with pytest.raises(DegenerateError, match="degenerate polyline"):
        prune_collinear([[0, 0], [1, 1], [2, 2], [3, 3]])


def test_prune_duplicates_and_wraparound():
    pts = np.array([[1.0, 0.0], [1.0, 1.0], [1.0, 1.0], [0.0, 1.0], [0.0, 0.0], [0.5, 0.0]])
    out = prune_collinear(pts).vertices
    assert len(out) == 4
    assert not any(np.allclose(p, [0.5, 0.0]) for p in out)


def test_constructor_checks():
    with pytest.raises(DegenerateError):
        DiscreteCurve(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        DiscreteCurve([[0, 0], [1, np.nan], [1, 1]])


def test_verify_on_vertices_square():
    assert verify_on_vertices(Isometry2.rotation(math.pi / 2), DiscreteCurve(SQUARE))
    assert not verify_on_vertices(Isometry2.rotation(math.pi / 4), DiscreteCurve(SQUARE))
    j, o = match_vertices(Isometry2.reflection(math.pi / 4), DiscreteCurve(SQUARE))
    assert o == -1


def test_regular_polygon_interpolant_is_circle():
    for n in range(3, 13):
        classes = classify_all(interpolant(prune_collinear(regular_polygon(n, 2.0, 0.4, (1, -3)))))
        assert list(classes) == [1] and classes[1].kind == "circle"


@given(polylines(min_n=3, max_n=10))
def test_circle_interpolant_means_regular(pts):
    c = prune_collinear(pts)
    T = interpolant(c)
    classes = classify_all(T)
    if list(classes) == [1] and classes[1].kind == "circle":
        r = np.linalg.norm(c.vertices - T.a0, axis=1)
        assert np.ptp(r) < 1e-8 * r.max()


def test_non_regular_quadrilateral():
    T = interpolant(DiscreteCurve(np.array([[0, 0], [2, 0], [2.5, 1], [0.3, 1.4]], dtype=float)))
    assert T.degree == 2 and np.all(T.b[1] == 0)


def test_detect_regular_pentagon():
    rep = detect(prune_collinear(regular_polygon(5, 1.0, 0.2, (3, 4))))
    assert rep.group.name == "D5"
    assert rep.group.center == pytest.approx([3, 4])
    assert rep.interpolant_group.name == "O2"


def test_detect_c4_twelve_vertices():
    rng = np.random.default_rng(4)
    c = prune_collinear(orbit_polyline(random_arc(rng, 3, math.pi / 2), 4, False))
    assert len(c) == 12
    assert detect(c).group.name == "C4" == brute_force_group(c).name


def test_detect_c4_polyline_with_d4_interpolant():
    # two vertices per quarter: the interpolant has exactly two circle modes (1 and -3),
    # which always line up, so the interpolant gains four mirrors the vertex cycle lacks
    rng = np.random.default_rng(4)
    c = prune_collinear(orbit_polyline(random_arc(rng, 2, math.pi / 2), 4, False))
    rep = detect(c)
    assert rep.interpolant_group.name == "D4"
    assert rep.group.name == "C4" and rep.rejected_candidates == 4
    assert any("4 reflections" in n for n in rep.notes)


def test_detect_d3_orbit():
    rng = np.random.default_rng(5)
    c = prune_collinear(orbit_polyline(random_arc(rng, 4, math.pi / 3), 3, True))
    assert detect(c).group.name == "D3" == brute_force_group(c).name


def test_brute_force_examples():
    assert brute_force_group(DiscreteCurve(SQUARE)).name == "D4"
    rng = np.random.default_rng(6)
    assert brute_force_group(DiscreteCurve(rng.uniform(size=(9, 2)))).name == "C1"


def test_vertex_symmetries_satisfy_interpolant_identity():
    rng = np.random.default_rng(7)
    for i in range(500):
        if i % 2:
            pts = planted_polyline(rng, int(rng.integers(1, 8)), bool(rng.integers(0, 2)), int(rng.integers(3, 6)))
        else:
            pts = rng.uniform(-1, 1, (int(rng.integers(3, 15)), 2))
        c = prune_collinear(pts)
        T = interpolant(c)
        n = len(c)
        for iso, j, o in brute_force_symmetries(c):
            assert satisfies_identity(T, iso, o, 2 * math.pi * j / n, 1e-9)


@given(polylines(min_n=3, max_n=14))
def test_detect_equals_oracle(pts):
    c = prune_collinear(pts)
    assert detect(c).group.isclose(brute_force_group(c), 1e-8, 1e-7)


@given(st.integers(1, 8), st.booleans(), st.integers(3, 6), st.integers(0, 2**32 - 1))
def test_detect_equals_oracle_planted(m, dihedral, arc, seed):
    c = prune_collinear(planted_polyline(np.random.default_rng(seed), m, dihedral, arc))
    g = detect(c).group
    assert g.isclose(brute_force_group(c), 1e-8, 1e-7)
    assert g.m % m == 0
    assert detect_symmetry_group(interpolant(c)).group.kind in ("C", "D", "O2")


def test_smoothing_identity_and_square():
    c = DiscreteCurve(SQUARE)
    assert np.array_equal(laplacian_smooth(c, 0.3, 0).vertices, SQUARE)
    for lam in (0.1, 0.5, 0.9):
        assert np.allclose(laplacian_smooth(c, lam, 1).vertices, (1 - lam) * SQUARE)
        assert np.allclose(smoothing_matrix(4, lam) @ SQUARE, (1 - lam) * SQUARE)


@given(polylines(min_n=3, max_n=20), st.floats(0.05, 0.95), st.integers(0, 20))
def test_smoothing_matches_matrix(pts, lam, steps):
    S = np.linalg.matrix_power(smoothing_matrix(len(pts), lam), steps)
    assert np.allclose(laplacian_smooth(DiscreteCurve(pts), lam, steps).vertices, S @ pts, atol=1e-12)


@given(polylines(min_n=3, max_n=20), isometries(), st.integers(0, 30))
def test_smoothing_commutes_with_isometry(pts, phi, steps):
    c = DiscreteCurve(pts)
    lhs = laplacian_smooth(c.transformed(phi), 0.5, steps).vertices
    rhs = apply(phi, laplacian_smooth(c, 0.5, steps).vertices)
    assert np.max(np.abs(lhs - rhs)) <= 1e-10 * max(1.0, np.abs(rhs).max())


def test_smoothing_argument_checks():
    with pytest.raises(ValueError):
        laplacian_smooth(DiscreteCurve(SQUARE), 1.0, 1)
    with pytest.raises(ValueError):
        laplacian_smooth(DiscreteCurve(SQUARE), 0.5, -1)


def test_filter_chain_d3_to_circle():
    rng = np.random.default_rng(8)
    c = prune_collinear(orbit_polyline(random_arc(rng, 7, math.pi / 3), 3, True))
    assert len(c) == 42
    chain = filtered_interpolants(c, interpolant(c).degree - 1)
    groups = [detect_symmetry_group(T).group for T in chain]
    assert groups[0].name == "D3"
    assert groups[-1].name == "O2"
    for g, h in zip(groups, groups[1:]):
        assert g.is_subgroup_of(h, 1e-7)
    assert np.allclose(chain[0].a, interpolant(c).a)


def test_filtered_interpolants_bounds():
    c = prune_collinear(regular_polygon(7) * [1.0, 0.5])
    assert len(filtered_interpolants(c, 0)) == 1
    with pytest.raises(DegenerateError):
        filtered_interpolants(c, interpolant(c).degree)
