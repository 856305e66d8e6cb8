import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ardeconv.armodels import build_w_ar1
from ardeconv.banded import SymBanded, to_dense
from ardeconv.deconv import ar1_deconv
from ardeconv.hslra import mat_norm_sq, theorem1_check, trajectory_matrix, vec_norm_sq
from oracles import conv_loops


def test_trajectory_examples():
    with pytest.warns(UserWarning):
        X = trajectory_matrix([1, 2, 3], 2)
    assert np.array_equal(X, [[1, 2], [2, 3]])
    with pytest.warns(UserWarning):
        X = trajectory_matrix([1, 2, 3, 4, 5], 3)
    assert np.array_equal(X, [[1, 2, 3], [2, 3, 4], [3, 4, 5]])
    X = trajectory_matrix(np.arange(10.0), 4)
    assert X.shape == (4, 7) and X[3, 6] == 9
    with pytest.raises(ValueError):
        trajectory_matrix([1, 2, 3], 1)
    with pytest.raises(ValueError):
        trajectory_matrix([1, 2, 3], 3)


def test_vec_norm_examples():
    z = np.array([1.0, -2.0, 0.5])
    assert vec_norm_sq(z, np.eye(3)) == pytest.approx(np.sum(z**2))
    assert vec_norm_sq([1.0, 1.0], np.array([[1.0, -1.0], [-1.0, 1.0]])) == 0.0
    assert vec_norm_sq([1.0, 0.0, -1.0], build_w_ar1(1.0, 2)) == 2.0
    with pytest.raises(ValueError):
        vec_norm_sq([1.0, 2.0], np.eye(3))


def test_mat_norm_examples():
    X = np.array([[1.0, 2.0], [2.0, 3.0]])
    assert mat_norm_sq(X, np.eye(2), np.eye(2)) == pytest.approx(np.sum(X**2))
    assert mat_norm_sq(X, np.diag([2.0, 1.0]), np.eye(2)) == 23.0
    with pytest.raises(ValueError):
        mat_norm_sq(X, np.eye(2), np.eye(3))


def test_white_noise_weights():
    # (1 + t)(1 + t^2 + t^4 + t^6) = C_7, so W is the identity
    Lm = np.diag([1.0, 1.0])
    Rm = np.diag([1.0, 0, 1.0, 0, 1.0, 0, 1.0])
    z = np.random.default_rng(2).normal(size=8)
    rep = theorem1_check(z, Lm, Rm)
    assert np.array_equal(rep.W_used, np.eye(8))
    assert rep.lhs == pytest.approx(np.sum(z**2), abs=1e-12)
    assert rep.rhs == pytest.approx(np.sum(z**2), abs=1e-12)


def test_deconv_pair_weights():
    pair = ar1_deconv(1.0, 4, "01")
    z = np.random.default_rng(4).normal(size=5)
    rep = theorem1_check(z, pair.A, pair.B)
    exact = z @ to_dense(build_w_ar1(1.0, 4)) @ z
    assert abs(rep.lhs - exact) <= 1e-10 and abs(rep.rhs - exact) <= 1e-10
    W = to_dense(build_w_ar1(1.0, 4)).copy()
    W[0, 0] += 0.1
    bad = theorem1_check(z, pair.A, pair.B, W)
    assert bad.rel_diff > 1e-3


def test_size_mismatch():
    with pytest.raises(ValueError):
        theorem1_check(np.ones(5), np.eye(2), np.eye(2))


def test_symbanded_weights_accepted():
    Lm = SymBanded(3, ([2.0, 1.0, 2.0], [0.5, 0.5]))
    Rm = SymBanded(2, ([1.0, 3.0], [-1.0]))
    z = np.arange(4.0)
    rep = theorem1_check(z, Lm, Rm)
    assert rep.rel_diff <= 1e-12
    assert np.allclose(rep.W_used, conv_loops(to_dense(Lm), to_dense(Rm)))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10**6))
def test_norm_identity_random(L, K, seed):
    rng = np.random.default_rng(seed)
    Lm = rng.normal(size=(L, L))
    Rm = rng.normal(size=(K, K))
    Lm, Rm = Lm + Lm.T, Rm + Rm.T
    z = rng.normal(size=L + K - 1)
    assert theorem1_check(z, Lm, Rm).rel_diff <= 1e-10
