import numpy as np
import pytest

from moufanglab.linalg import (
    SingularMatrixError,
    commutator,
    frobenius_norm,
    mat_inv,
    mat_mul,
    numeric_rank,
    solve_linear,
)
from moufanglab.rng import stream


def _random_matrix(st, n, scale=1.0):
    return np.array([[st.uniform(-scale, scale) for _ in range(n)] for _ in range(n)])


def test_solve_identity():
    b = np.array([1.0, -2.0, 3.0])
    assert np.array_equal(solve_linear(np.eye(3), b), b)


def test_solve_scaled_identity():
    b = np.array([2.0, 4.0])
    assert np.allclose(solve_linear(2.0 * np.eye(2), b), b / 2.0, atol=0)


def test_solve_residual_recomputation():
    st = stream(21, "solve")
    for _ in range(50):
        a = np.eye(5) + 0.3 * _random_matrix(st, 5)
        b = np.array([st.uniform(-2, 2) for _ in range(5)])
        x = solve_linear(a, b)
        assert np.linalg.norm(a @ x - b) <= 1e-10 * (1.0 + np.linalg.norm(b))


def test_solve_matrix_rhs():
    st = stream(22, "solve-mat")
    a = np.eye(4) + 0.2 * _random_matrix(st, 4)
    x = solve_linear(a, np.eye(4))
    assert np.allclose(a @ x, np.eye(4), atol=1e-12)


def test_singular_matrix_raises():
    with pytest.raises(SingularMatrixError):
        solve_linear(np.array([[1.0, 2.0], [2.0, 4.0]]), np.array([1.0, 1.0]))
    with pytest.raises(SingularMatrixError):
        mat_inv(np.zeros((3, 3)))


def test_mat_inv():
    st = stream(23, "inv")
    a = np.eye(3) + 0.25 * _random_matrix(st, 3)
    assert np.allclose(mat_inv(a) @ a, np.eye(3), atol=1e-12)


def test_mat_mul_and_norm():
    a = np.array([[1.0, 2.0], [3.0, 4.0]])
    assert np.array_equal(mat_mul(a, np.eye(2)), a)
    assert frobenius_norm(np.array([[3.0, 4.0]])) == 5.0


def test_commutator_properties():
    st = stream(24, "comm")
    a = _random_matrix(st, 4)
    b = _random_matrix(st, 4)
    assert frobenius_norm(commutator(a, a)) == 0.0
    assert frobenius_norm(commutator(np.eye(4), b)) == 0.0
    assert frobenius_norm(commutator(a, b) + commutator(b, a)) == 0.0


def test_numeric_rank_examples():
    assert numeric_rank([[1.0, 0.0], [0.0, 1.0]], 1e-8) == 2
    assert numeric_rank([[1.0, 0.0], [2.0, 0.0]], 1e-8) == 1
    assert numeric_rank([], 1e-8) == 0
    assert numeric_rank([[0.0, 0.0]], 1e-8) == 0


def test_numeric_rank_invariances():
    st = stream(25, "rank")
    vecs = [np.array([st.uniform(-1, 1) for _ in range(6)]) for _ in range(4)]
    vecs.append(vecs[0] + vecs[1])  # dependent
    base = numeric_rank(vecs, 1e-8)
    assert base == 4
    perm = [vecs[i] for i in (3, 1, 4, 0, 2)]
    assert numeric_rank(perm, 1e-8) == base
    scaled = [2.0 * vecs[0]] + [np.asarray(v) for v in vecs[1:]]
    assert numeric_rank(scaled, 1e-8) == base


def test_numeric_rank_gram_oracle():
    st = stream(26, "rank-gram")
    vecs = [np.array([st.uniform(-1, 1) for _ in range(8)]) for _ in range(5)]
    vecs += [vecs[0] - 2.0 * vecs[2], 0.5 * vecs[1]]
    m = np.column_stack(vecs)
    lam = np.linalg.eigvalsh(m.T @ m)
    sigma = np.sqrt(np.clip(lam, 0.0, None))
    gram_rank = int(np.sum(sigma > 1e-8 * sigma.max()))
    assert numeric_rank(vecs, 1e-8) == gram_rank == 5
