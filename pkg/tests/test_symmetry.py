import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from symcurve import DegenerateError, Isometry2, TrigCurve, detect_symmetry_group, maximal_md, theta_value
from symcurve.shapes import cardioid, deltoid, random_isometry, two_ellipse_curve
from symcurve.symmetry import (
    SigmaSequence,
    detect_central,
    ellipse_axis_candidates,
    rytz_vertex_parameter,
    syzygy_candidates,
    verify_reflection,
    verify_rotation,
)
from symcurve.trig_curve import apply_isometry, evaluate, reparameterize, to_cycloid_form

from conftest import angles, isometries
from oracles import brute_maximal_md, reflection_grid_search

E, P, N, PM = frozenset(), frozenset({1}), frozenset({-1}), frozenset({1, -1})


def test_theta_small_m():
    for k in range(1, 20):
        assert theta_value(1, 5, k) == PM
        assert theta_value(2, 1, k) == (E if k % 2 == 0 else PM)


def test_theta_noncoprime_empty():
    assert all(theta_value(12, d, k) == E for d in (0, 2, 3, 4, 6, 8, 9) for k in range(1, 50))


def test_theta_rejects_bad_args():
    with pytest.raises(ValueError):
        theta_value(0, 1, 1)


def test_sigma_listing():
    s = SigmaSequence.from_listing(({1}, (), (), (), {-1}))
    assert s.signed_frequencies() == [1, -5]
    assert s(5) == N and s(2) == E and s.degree == 5
    assert s.dominated_by(6, 1) and not s.dominated_by(4, 1)


@pytest.mark.parametrize(
    "spectrum, expected",
    [({1: 1, 5: -1}, (6, 1)), ({1: 1, 2: -1}, (3, 1)), ({1: 1, 2: 1}, (1, 1)), ({3: 1}, None)],
)
def test_maximal_md_examples(spectrum, expected):
    assert maximal_md(spectrum) == expected


def test_maximal_md_empty():
    with pytest.raises(ValueError):
        maximal_md({})


def test_maximal_md_matches_brute_force():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        r = int(rng.integers(1, 7))
        ks = rng.choice(np.arange(1, 51), size=r, replace=False)
        spectrum = {int(k): int(rng.choice([-1, 1])) for k in ks}
        signed = SigmaSequence(spectrum).signed_frequencies()
        assert maximal_md(spectrum) == brute_maximal_md(signed), spectrum


def test_maximal_md_is_dominating():
    rng = np.random.default_rng(12)
    for _ in range(200):
        ks = rng.choice(np.arange(1, 30), size=3, replace=False)
        sigma = SigmaSequence({int(k): int(rng.choice([-1, 1])) for k in ks})
        m, d = maximal_md(sigma)
        assert sigma.dominated_by(m, d)
        assert not any(sigma.dominated_by(mm, dd) for mm in range(m + 1, 60) for dd in range(1, mm + 1))


def test_detect_central():
    odd = TrigCurve.from_harmonics((0, 0), {1: ((2, 0), (0, 1)), 3: ((0.3, 0.1), (0.2, -0.4)), 5: ((0.1, 0), (0, 0.05))})
    assert detect_central(odd)
    t = np.linspace(0, 2 * np.pi, 50)
    assert np.allclose(-evaluate(odd, t), evaluate(odd, t + np.pi))
    assert not detect_central(two_ellipse_curve())


@given(st.floats(0.2, 3), st.floats(0.2, 3), angles, angles, st.integers(1, 6))
def test_rytz_is_critical_point(r1, r2, rot, shift, k):
    if abs(r1 - r2) < 1e-3:
        return
    R = Isometry2.rotation(rot).matrix
    c = TrigCurve.from_harmonics((0, 0), {k: (R @ [r1, 0], R @ [0, r2])})
    c = reparameterize(c, 1, shift)
    a, b = c.harmonic(k)
    t0 = rytz_vertex_parameter(a, b, k)
    assert 0 <= t0 < math.pi / (2 * k)
    p = a * math.cos(k * t0) + b * math.sin(k * t0)
    dp = k * (-a * math.sin(k * t0) + b * math.cos(k * t0))
    assert abs(p @ dp) <= 1e-9 * max(r1, r2) ** 2 * k


def test_rytz_examples():
    assert rytz_vertex_parameter((2, 0), (0, 1), 1) == 0.0
    assert rytz_vertex_parameter((1, -2), (1, 2), 1) == pytest.approx(math.pi / 4)
    with pytest.raises(ValueError, match="circle"):
        rytz_vertex_parameter((1, 0), (0, 1), 1)


def test_two_ellipse_axis_candidates():
    assert ellipse_axis_candidates(two_ellipse_curve()) == pytest.approx([math.pi / 4, 3 * math.pi / 4])
    # only pi/4 (and pi/4 + pi) is a true mirror parameter
    assert verify_reflection(two_ellipse_curve(), 3 * math.pi / 4) is None
    w = verify_reflection(two_ellipse_curve(), math.pi / 4)
    assert w.isclose(Isometry2.reflection(0.0))
    assert verify_reflection(two_ellipse_curve(), 0.0) is None


def test_syzygy_examples():
    assert syzygy_candidates(to_cycloid_form(deltoid())) == pytest.approx([0, math.pi / 3, 2 * math.pi / 3])
    assert syzygy_candidates(to_cycloid_form(cardioid())) == pytest.approx([0.0])
    assert 0.0 in syzygy_candidates([(1, 1.0, 0.7, 1), (4, 0.5, 0.7, -1)])
    with pytest.raises(ValueError):
        syzygy_candidates([(1, 1.0, 0.0, 1)])


def test_verify_rotation_examples():
    assert verify_rotation(deltoid(), 3, 1).isclose(Isometry2.rotation(2 * math.pi / 3))
    assert verify_rotation(deltoid(), 3, 2) is None
    assert verify_rotation(deltoid(), 2, 1) is None
    odd = TrigCurve.from_harmonics((1, 1), {1: ((2, 0), (0, 1)), 3: ((0.3, 0.1), (0.2, -0.4))})
    assert verify_rotation(odd, 2, 1).isclose(Isometry2.rotation(math.pi, (1, 1)))
    with pytest.raises(ValueError):
        verify_rotation(deltoid(), 1, 1)


def test_verify_reflection_deltoid_x_axis():
    assert verify_reflection(deltoid(), 0.0).isclose(Isometry2.reflection(0.0))


@pytest.mark.parametrize(
    "curve, name, axes",
    [
        (two_ellipse_curve(), "D1", [0.0]),
        (deltoid(), "D3", [0, math.pi / 3, 2 * math.pi / 3]),
        (cardioid(), "D1", [0.0]),
    ],
)
def test_named_curves(curve, name, axes):
    res = detect_symmetry_group(curve)
    assert res.group.name == name
    assert res.group.axes == pytest.approx(axes, abs=1e-9)


def test_circle_is_o2():
    res = detect_symmetry_group(TrigCurve.from_harmonics((1, 2), {3: ((1, 0), (0, 1))}))
    assert res.group.name == "O2" and res.group.center == pytest.approx([1, 2])


def test_point_is_degenerate():
    with pytest.raises(DegenerateError, match="point"):
        detect_symmetry_group(TrigCurve((1, 1), np.zeros((0, 2)), np.zeros((0, 2))))


def test_single_ellipse_is_d2():
    res = detect_symmetry_group(TrigCurve.from_harmonics((0, 0), {1: ((2, 1), (-0.5, 1))}))
    assert res.group.name == "D2"


def test_seven_fold_without_syzygy():
    c = TrigCurve.from_cycloid((0, 0), [(1, 1.0, 0.0, 1), (6, 0.3, 1.1, -1), (8, 0.2, 2.9, 1)])
    res = detect_symmetry_group(c)
    assert res.group.name == "C7" and res.md == (7, 1)
    assert reflection_grid_search(c) == []
    # two circles always line up somewhere, so this pair alone has mirrors
    two = TrigCurve.from_cycloid((0, 0), [(1, 1.0, 0.0, 1), (6, 0.3, 1.1, -1)])
    assert detect_symmetry_group(two).group.name == "D7"


def test_non_primitive_curve():
    c = TrigCurve.from_harmonics((0, 0), {2: ((2, 0), (0, 2)), 4: ((1, 0), (0, -1))})  # deltoid traced twice
    res = detect_symmetry_group(c)
    assert res.group.name == "D3" and res.primitive_order == 2


@st.composite
def symmetric_curves(draw):
    """(curve, expected group name) from the coefficient patterns that force a group."""
    r = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    family = draw(st.sampled_from(["D1", "C2", "D2", "Cm", "Dm"]))
    if family == "D1":
        N = int(r.integers(2, 5))
        h = {k: ((r.uniform(0.2, 1), 0), (0, r.uniform(0.2, 1))) for k in range(1, N + 1)}
        c, name = TrigCurve.from_harmonics((0, 0), h), "D1"
    elif family in ("C2", "D2"):
        h = {}
        for k in (1, 3):
            if family == "D2":
                h[k] = ((r.uniform(0.2, 1), 0), (0, r.uniform(0.2, 1)))
            else:
                h[k] = (r.uniform(-1, 1, 2), r.uniform(-1, 1, 2))
        c, name = TrigCurve.from_harmonics((0, 0), h), family
    else:
        m = int(r.integers(3, 8))
        ks = [1, m - 1, m + 1]
        sig = [1, -1, 1]
        phases = r.uniform(0, 2 * np.pi, 3) if family == "Cm" else np.zeros(3)
        terms = [(k, r.uniform(0.2, 1.0) / k, p, s) for k, p, s in zip(ks, phases, sig)]
        if m == 3:
            terms = [terms[0], terms[2]] + [(5, 0.1, phases[1], -1)]
        c, name = TrigCurve.from_cycloid((0, 0), terms), family.replace("m", str(m))
    phi = Isometry2(Isometry2.rotation(r.uniform(0, 6)).matrix, r.uniform(-3, 3, 2))
    c = apply_isometry(phi, reparameterize(c, int(r.choice([-1, 1])), r.uniform(0, 6)))
    return c, name


def _on_curve(c, iso):
    t = np.linspace(0, 2 * np.pi, 4000, endpoint=False)
    pts = evaluate(c, t)
    img = iso(pts[::40])
    dist = np.linalg.norm(img[:, None, :] - pts[None, :, :], axis=2).min(axis=1)
    return dist.max() < 1e-2 * c.scale


@given(symmetric_curves())
def test_planted_groups_and_sound_witnesses(case):
    c, name = case
    res = detect_symmetry_group(c)
    assert res.group.name == name
    assert all(_on_curve(c, w) for w in res.witnesses)
    assert all(res.group.contains(w, 1e-8) for w in res.witnesses)


@given(symmetric_curves(), isometries())
def test_equivariance(case, phi):
    c, _ = case
    g = detect_symmetry_group(c).group
    h = detect_symmetry_group(apply_isometry(phi, c)).group
    assert h.isclose(g.conjugate(phi), 1e-8, 1e-8)


@given(symmetric_curves(), st.sampled_from([-1, 1]), angles)
def test_reparameterization_invariance(case, alpha, beta):
    c, _ = case
    g = detect_symmetry_group(c).group
    assert detect_symmetry_group(reparameterize(c, alpha, beta)).group.isclose(g, 1e-8, 1e-8)


def test_random_curves_agree_with_grid_search():
    rng = np.random.default_rng(3)
    for _ in range(8):
        c = TrigCurve((0, 0), rng.uniform(-1, 1, (3, 2)), rng.uniform(-1, 1, (3, 2)))
        res = detect_symmetry_group(c)
        assert res.group.name == "C1"
        assert reflection_grid_search(c) == []
        phi = random_isometry(rng)
        assert detect_symmetry_group(apply_isometry(phi, c)).group.name == "C1"
