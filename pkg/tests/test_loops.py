import numpy as np
import pytest

from moufanglab.cayley import CD
from moufanglab.jets import jet2_eval
from moufanglab.loops import (
    ChartDomainError,
    LoopChart,
    NotUnitError,
    commutator_map,
    commutator_map_alt,
    flexibility_residual,
    left_inverse_residual,
    moufang_residual,
)
from moufanglab.rng import stream


def _triple_in_chart(chart, st, radius):
    while True:
        pts = [st.ball_point(chart.r, radius) for _ in range(3)]
        try:
            m = moufang_residual(chart, *pts)
            f = flexibility_residual(chart, *pts)
        except ChartDomainError:
            continue
        return m, f


def test_embed_origin_is_identity():
    chart = LoopChart(2)
    assert chart.embed(chart.identity()).coeffs == (1.0, 0.0, 0.0, 0.0)


def test_embed_boundary_limit():
    chart = LoopChart(2)
    u = chart.embed([1.0 - 1e-6, 0.0, 0.0])
    assert abs(u.coeffs[1] - 1.0) <= 2e-6
    assert u.coeffs[0] < 2e-3


def test_embed_unit_norm():
    chart = LoopChart(3)
    st = stream(41, "embed")
    for _ in range(50):
        x = st.ball_point(7, 0.9)
        assert abs(float(chart.embed(x).norm2()) - 1.0) <= 1e-14


def test_embed_rejects_outside_ball():
    chart = LoopChart(2)
    with pytest.raises(ChartDomainError):
        chart.embed([1.0, 0.2, 0.0])


def test_project_identity_and_roundtrip():
    chart = LoopChart(3)
    assert chart.project(CD.unit(3)) == [0.0] * 7
    st = stream(42, "project")
    for _ in range(50):
        x = st.ball_point(7, 0.9)
        back = np.array(chart.project(chart.embed(x)))
        assert np.max(np.abs(back - x)) <= 1e-14


def test_project_contract_violations():
    chart = LoopChart(2)
    bad = CD([-0.5, np.sqrt(0.75), 0.0, 0.0])
    with pytest.raises(ChartDomainError):
        chart.project(bad)
    with pytest.raises(NotUnitError):
        chart.project(CD([2.0, 0.0, 0.0, 0.0]))


def test_unit_and_inverse_laws():
    chart = LoopChart(3)
    st = stream(43, "laws")
    e = chart.identity()
    for _ in range(25):
        x = st.ball_point(7, 0.6)
        y = st.ball_point(7, 0.6)
        assert np.max(np.abs(np.array(chart.mul(e, y)) - y)) <= 1e-15
        assert np.max(np.abs(np.array(chart.mul(y, e)) - y)) <= 1e-15
        assert np.max(np.abs(chart.mul(x, chart.inv(x)))) <= 1e-14
        assert np.max(np.abs(chart.mul(chart.inv(x), x))) <= 1e-14
        assert chart.inv(chart.inv(list(x))) == list(x)
    assert chart.inv(e) == e


def test_left_inverse_property():
    chart = LoopChart(3)
    st = stream(44, "quasigroup")
    for _ in range(50):
        a = st.ball_point(7, 0.5)
        b = st.ball_point(7, 0.5)
        assert left_inverse_residual(chart, a, b) <= 1e-12


def test_nonassociativity_witness_level3():
    chart = LoopChart(3)
    st = stream(45, "nonassoc")
    worst = 0.0
    for _ in range(200):
        x, y, z = (st.ball_point(7, 0.5) for _ in range(3))
        try:
            lhs = np.array(chart.mul(chart.mul(x, y), z))
            rhs = np.array(chart.mul(x, chart.mul(y, z)))
        except ChartDomainError:
            continue
        worst = max(worst, float(np.linalg.norm(lhs - rhs)))
    assert worst >= 1e-3


def test_moufang_residual_identity_element():
    chart = LoopChart(3)
    st = stream(46, "moufang-e")
    g, h = st.ball_point(7, 0.5), st.ball_point(7, 0.5)
    assert moufang_residual(chart, chart.identity(), g, h) == 0.0


@pytest.mark.parametrize("level", [1, 2, 3])
def test_moufang_and_flexibility_hold(level):
    chart = LoopChart(level)
    st = stream(47, f"moufang-{level}")
    for _ in range(100):
        m, f = _triple_in_chart(chart, st, 0.5)
        assert m <= 1e-12
        assert f <= 1e-12


def test_commutator_map_degenerate_arguments():
    chart = LoopChart(2)
    st = stream(48, "commutator")
    g = st.ball_point(3, 0.5)
    e = chart.identity()
    assert np.max(np.abs(commutator_map(chart, g, e))) <= 1e-14
    assert np.max(np.abs(commutator_map(chart, g, g))) <= 1e-14


def test_commutator_map_matches_ambient_quaternion():
    chart = LoopChart(2)
    st = stream(49, "commutator-amb")
    for _ in range(20):
        g, h = st.ball_point(3, 0.5), st.ball_point(3, 0.5)
        u, v = chart.embed(g), chart.embed(h)
        ambient = ((u * v) * u.inv()) * v.inv()
        direct = np.array(chart.project(ambient))
        assert np.max(np.abs(direct - commutator_map(chart, g, h))) <= 1e-12


def _raw_tensor(chart, mapper):
    r = chart.r
    raw = np.empty((r, r, r))
    zero = np.zeros(2 * r)
    for j in range(r):
        u = np.zeros(2 * r)
        u[j] = 1.0
        for k in range(r):
            v = np.zeros(2 * r)
            v[r + k] = 1.0
            _, _, _, duv = jet2_eval(lambda z: mapper(z[:r], z[r:]), zero, u, v)
            raw[:, j, k] = duv
    return raw


@pytest.mark.parametrize("level", [2, 3])
def test_commutator_bracketing_independence(level):
    chart = LoopChart(level)
    base = _raw_tensor(chart, lambda g, h: commutator_map(chart, g, h))
    pairs = _raw_tensor(chart, lambda g, h: commutator_map_alt(chart, g, h, "pairs"))
    right = _raw_tensor(chart, lambda g, h: commutator_map_alt(chart, g, h, "right"))
    assert np.max(np.abs(base - pairs)) <= 1e-9
    assert np.max(np.abs(base - right)) <= 1e-9


def test_chart_construction_contracts():
    with pytest.raises(ValueError):
        LoopChart(4)
    with pytest.raises(ValueError):
        LoopChart(0)
    with pytest.raises(ValueError):
        LoopChart(2, radius=1.5)
    assert LoopChart(3).r == 7 and LoopChart(3).n == 8
