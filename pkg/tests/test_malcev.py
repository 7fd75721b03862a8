import itertools

import numpy as np
import pytest

from moufanglab.cayley import basis_table
from moufanglab.jets import FdDiffer
from moufanglab.linalg import solve_linear
from moufanglab.loops import ChartDomainError, LoopChart
from moufanglab.malcev import (
    auxiliary_matrix,
    bracket,
    jacobiator,
    malcev_residual,
    structure_constants,
    structure_functions,
    tensor_entries,
    tensor_to_json_dict,
)
from moufanglab.rng import stream


def ambient_commutator_tensor(level):
    """Oracle: bracket constants read off the basis multiplication table.

    For distinct imaginary units e_j e_k - e_k e_j = 2 e_j e_k, so entry
    (m-1, j-1, k-1) is twice the table sign.
    """
    table = basis_table(level)
    r = (1 << level) - 1
    c = np.zeros((r, r, r))
    for j in range(1, r + 1):
        for k in range(1, r + 1):
            if j == k:
                continue
            m = table.index[j][k]
            assert m >= 1
            c[m - 1, j - 1, k - 1] = 2.0 * table.sign[j][k]
    return c


def test_circle_structure_constants_vanish():
    sc = structure_constants(LoopChart(1))
    assert np.max(np.abs(sc.tensor)) <= 1e-12
    assert sc.raw_asymmetry <= 1e-12


def test_quaternion_structure_constants():
    sc = structure_constants(LoopChart(2))
    assert abs(sc.tensor[2, 0, 1] - 2.0) <= 1e-9  # c^3_12 = 2
    assert np.max(np.abs(sc.tensor - ambient_commutator_tensor(2))) <= 1e-9
    assert sc.raw_asymmetry <= 1e-9


def test_octonion_structure_constants():
    sc = structure_constants(LoopChart(3))
    assert abs(sc.tensor[2, 0, 1] - 2.0) <= 1e-9
    assert np.max(np.abs(sc.tensor - ambient_commutator_tensor(3))) <= 1e-9
    assert sc.raw_asymmetry <= 1e-9


def test_tensor_exactly_antisymmetric_after_construction():
    for level in (1, 2, 3):
        t = structure_constants(LoopChart(level)).tensor
        assert np.array_equal(t, -t.swapaxes(1, 2))


def test_bracket_properties():
    sc = structure_constants(LoopChart(2))
    st = stream(51, "bracket")
    for _ in range(25):
        x, y = st.tangent(3), st.tangent(3)
        assert np.max(np.abs(bracket(sc.tensor, x, x))) == 0.0
        assert np.array_equal(bracket(sc.tensor, x, y), -bracket(sc.tensor, y, x))
    e1, e2 = np.eye(3)[0], np.eye(3)[1]
    assert np.allclose(bracket(sc.tensor, e1, e2), [0.0, 0.0, 2.0], atol=1e-12)


def test_jacobiator_quaternion_is_lie():
    sc = structure_constants(LoopChart(2))
    eye = np.eye(3)
    for a, b, c in itertools.product(range(3), repeat=3):
        assert np.linalg.norm(jacobiator(sc.tensor, eye[a], eye[b], eye[c])) <= 1e-12


def test_jacobiator_octonion_nonzero():
    sc = structure_constants(LoopChart(3))
    eye = np.eye(7)
    worst = max(
        np.linalg.norm(jacobiator(sc.tensor, eye[a], eye[b], eye[c]))
        for a, b, c in itertools.product(range(7), repeat=3)
    )
    assert worst >= 1.0


def test_jacobiator_alternating_slots():
    sc = structure_constants(LoopChart(3))
    st = stream(52, "jac")
    x, y = st.tangent(7), st.tangent(7)
    assert np.max(np.abs(jacobiator(sc.tensor, x, x, y))) <= 1e-12


def test_malcev_identity():
    # any Lie tensor satisfies it trivially
    sc2 = structure_constants(LoopChart(2))
    st = stream(53, "malcev")
    for _ in range(50):
        x, y, z = st.tangent(3), st.tangent(3), st.tangent(3)
        assert malcev_residual(sc2.tensor, x, y, z) <= 1e-12
    # octonions satisfy it nontrivially
    sc3 = structure_constants(LoopChart(3))
    for _ in range(200):
        x, y, z = st.tangent(7), st.tangent(7), st.tangent(7)
        assert malcev_residual(sc3.tensor, x, y, z) <= 1e-9
    assert malcev_residual(sc3.tensor, np.zeros(7), st.tangent(7), st.tangent(7)) == 0.0


def test_auxiliary_matrix_identity():
    for level in (1, 2, 3):
        chart = LoopChart(level)
        v = auxiliary_matrix(chart, chart.identity())
        assert np.max(np.abs(v - np.eye(chart.r))) <= 1e-14


def test_auxiliary_matrix_invertible_and_matches_fd():
    chart = LoopChart(3)
    st = stream(54, "aux")
    fd = FdDiffer()
    for _ in range(20):
        g = st.ball_point(7, 0.6)
        v = auxiliary_matrix(chart, g)
        solve_linear(v, np.zeros(7))  # raises SingularMatrixError if degenerate
        v_fd = auxiliary_matrix(chart, g, fd)
        assert np.max(np.abs(v - v_fd)) <= 1e-5


def test_circle_auxiliary_value():
    chart = LoopChart(1)
    v = auxiliary_matrix(chart, [0.6])
    assert abs(v[0, 0] - np.sqrt(1.0 - 0.36)) <= 1e-14


def test_structure_functions_initial_condition():
    for level in (1, 2, 3):
        chart = LoopChart(level)
        sc = structure_constants(chart)
        sf = structure_functions(chart, chart.identity())
        assert np.max(np.abs(sf.tensor - sc.tensor)) <= 1e-9


def test_structure_functions_circle_abelian():
    chart = LoopChart(1)
    st = stream(55, "circle-sf")
    for _ in range(10):
        g = st.ball_point(1, 0.6)
        assert np.max(np.abs(structure_functions(chart, g).tensor)) <= 1e-12


def test_structure_functions_quaternion_constant():
    chart = LoopChart(2)
    sc = structure_constants(chart)
    st = stream(56, "quat-sf")
    for _ in range(10):
        g = st.ball_point(3, 0.5)
        sf = structure_functions(chart, g)
        assert np.max(np.abs(sf.tensor - sc.tensor)) <= 1e-9


def test_derivative_algebra_is_malcev():
    chart = LoopChart(3)
    st = stream(57, "deriv-malcev")
    for _ in range(20):
        g = st.ball_point(7, 0.5)
        cg = structure_functions(chart, g)
        assert cg.raw_asymmetry <= 1e-9
        for _ in range(50):
            x, y, z = st.tangent(7), st.tangent(7), st.tangent(7)
            assert malcev_residual(cg.tensor, x, y, z) <= 1e-7


def test_octonion_deformation_is_real_and_continuous():
    chart = LoopChart(3)
    sc = structure_constants(chart)
    st = stream(58, "deform")
    g0 = st.ball_point(7, 1.0)
    g0 /= np.linalg.norm(g0)
    gaps = []
    for t in (0.4, 0.2, 0.1, 0.05):
        sf = structure_functions(chart, t * g0)
        gaps.append(np.max(np.abs(sf.tensor - sc.tensor)))
    assert gaps[0] > 1e-3  # the deformation is nontrivial
    assert all(a > b for a, b in zip(gaps, gaps[1:]))  # and shrinks toward e


def test_tensor_json_export():
    circle = structure_constants(LoopChart(1))
    doc = tensor_to_json_dict(circle.tensor)
    assert doc == {"r": 1, "entries": []}
    quat = structure_constants(LoopChart(2))
    entries = tensor_entries(quat.tensor)
    assert {"i": 3, "j": 1, "k": 2, "value": 2.0} in entries
    assert all(abs(e["value"]) > 1e-12 for e in entries)
    assert len(entries) == 6


def test_structure_functions_out_of_chart_point_raises():
    chart = LoopChart(2)
    with pytest.raises(ChartDomainError):
        structure_functions(chart, [1.2, 0.0, 0.0])
