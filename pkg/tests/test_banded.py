import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ardeconv.armodels import build_w_ar1
from ardeconv.banded import (
    SymBanded,
    conv_banded,
    conv_dense,
    conv_diag_right,
    diag_gf,
    from_dense,
    gf_matrix_eval,
    pad_exponent,
    to_dense,
)
from ardeconv.polynomials import Poly, ones_poly
from oracles import conv_loops, gf_eval


@st.composite
def banded(draw, max_dim=8, max_bw=3):
    dim = draw(st.integers(1, max_dim))
    bw = draw(st.integers(0, min(max_bw, dim - 1)))
    vals = st.floats(-5, 5, allow_nan=False)
    diags = tuple(draw(st.lists(vals, min_size=dim - k, max_size=dim - k)) for k in range(bw + 1))
    return SymBanded(dim, diags)


def test_invariants():
    with pytest.raises(ValueError):
        SymBanded(3, ([1, 2, 3], [1]))
    with pytest.raises(ValueError):
        SymBanded(2, ([1, 2], [1], []))
    with pytest.raises(ValueError):
        SymBanded(2, ([1, np.nan],))
    m = SymBanded(3, ([1, 2, 3], [4, 5]))
    with pytest.raises(ValueError):
        m.diagonals[0][0] = 7
    assert m.half_bw == 1
    assert m.diag(-1).tolist() == [4, 5]


def test_dense_round_trip():
    m = build_w_ar1(0.5, 5)
    assert from_dense(to_dense(m), 1).allclose(m, atol=0)
    d = to_dense(m)
    assert np.array_equal(d, d.T)


def test_from_dense_errors():
    with pytest.raises(ValueError):
        from_dense(np.array([[1.0, 2.0], [3.0, 1.0]]), 1)
    with pytest.raises(ValueError):
        from_dense(np.array([[1.0, 0, 1.0], [0, 1.0, 0], [1.0, 0, 1.0]]), 1)
    with pytest.raises(ValueError):
        from_dense(np.ones((2, 3)), 1)


def test_conv_dense_examples():
    a = np.array([[1.0, -1.0], [-1.0, 1.0]])
    assert np.array_equal(conv_dense(a, np.eye(1)), a)
    assert np.array_equal(conv_dense(a, np.eye(2)), [[1, -1, 0], [-1, 2, -1], [0, -1, 1]])
    assert np.array_equal(conv_dense(a, np.eye(2)), to_dense(build_w_ar1(1.0, 2)))
    a2, b2 = np.array([[1.0, 2], [3, 4]]), np.array([[0.0, 1], [1, 0]])
    got = conv_dense(a2, b2)
    # (1 + 2s + 3t + 4ts)(s + t), read off coefficient by coefficient
    assert np.array_equal(got, [[0, 1, 2], [1, 5, 4], [3, 4, 0]])
    assert np.array_equal(got, conv_loops(a2, b2))
    with pytest.raises(ValueError):
        conv_dense(np.ones((2, 3)), np.eye(2))


def test_conv_banded_examples():
    a = SymBanded(2, ([1, 1], [-1]))
    c = conv_banded(a, SymBanded.diagonal([1.0]))
    assert c.allclose(a, atol=0)
    c = conv_banded(a, SymBanded.diagonal([1.0, 1.0]))
    assert c.dim == 3 and c.half_bw == 1
    assert c.diagonals[0].tolist() == [1, 2, 1]
    assert c.diagonals[1].tolist() == [-1, -1]
    rng = np.random.default_rng(3)
    a = SymBanded(4, (rng.normal(size=4), rng.normal(size=3)))
    b = SymBanded(3, (rng.normal(size=3), rng.normal(size=2)))
    c = conv_banded(a, b)
    assert (c.dim, c.half_bw) == (6, 2)
    assert np.max(np.abs(to_dense(c) - conv_loops(to_dense(a), to_dense(b)))) <= 1e-12


def test_pad_exponent():
    assert pad_exponent(1, 1) == 0
    assert pad_exponent(1, -1) == 1
    assert pad_exponent(-2, 1) == 1
    assert pad_exponent(3, -1) == 1


@settings(max_examples=150, deadline=None)
@given(banded(), banded())
def test_conv_banded_matches_loops(a, b):
    c = conv_banded(a, b)
    ref = conv_loops(to_dense(a), to_dense(b))
    scale = max(1.0, np.max(np.abs(ref)))
    assert np.max(np.abs(to_dense(c) - ref)) <= 1e-12 * scale
    assert np.max(np.abs(conv_dense(to_dense(a), to_dense(b)) - ref)) <= 1e-12 * scale


@settings(max_examples=100, deadline=None)
@given(banded(), banded())
def test_convolution_commutes(a, b):
    assert conv_banded(a, b).allclose(conv_banded(b, a), atol=1e-9)


@settings(max_examples=100, deadline=None)
@given(banded(max_dim=5), banded(max_dim=5), st.complex_numbers(max_magnitude=1.5),
       st.complex_numbers(max_magnitude=1.5))
def test_gf_multiplicative(a, b, t, s):
    lhs = gf_matrix_eval(conv_banded(a, b), t, s)
    rhs = gf_matrix_eval(a, t, s) * gf_matrix_eval(b, t, s)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs), abs(rhs), 1e3)


def test_gf_eval_examples():
    assert gf_matrix_eval(SymBanded.diagonal([4.0]), 2 + 1j, -3) == 4
    m = SymBanded(2, ([1, 1], [-1]))
    assert gf_matrix_eval(m, 2, 3) == 2
    assert gf_matrix_eval(to_dense(m), 2, 3) == 2
    rng = np.random.default_rng(0)
    d = rng.normal(size=(4, 4))
    assert gf_matrix_eval(d, 0.3, -1.2) == pytest.approx(gf_eval(d, 0.3, -1.2))


def test_conv_diag_right():
    a = SymBanded(2, ([1, 1], [-1]))
    assert conv_diag_right(a, [1.0]).allclose(a, atol=0)
    assert conv_diag_right(a, [1.0, 1.0]).allclose(build_w_ar1(1.0, 2), atol=0)
    m = build_w_ar1(0.3, 4)
    doubled = conv_diag_right(m, [2.0])
    assert np.array_equal(to_dense(doubled), 2 * to_dense(m))
    b = np.array([1.0, -2.0, 0.5])
    assert conv_diag_right(m, b).allclose(conv_banded(m, SymBanded.diagonal(b)), atol=1e-12)


def test_diag_gf():
    m = SymBanded.diagonal([3.0, 1.0, 2.0])
    assert diag_gf(m, 0) == Poly([3, 1, 2])
    w = build_w_ar1(0.7, 4)
    assert diag_gf(w, 1).allclose(-0.7 * ones_poly(3), atol=1e-15)
    with pytest.raises(ValueError):
        diag_gf(w, 2)


def test_from_gfs_pads():
    m = SymBanded.from_gfs([Poly([1, 1]), Poly([2])], 3)
    assert m.diagonals[0].tolist() == [1, 1, 0]
    assert m.diagonals[1].tolist() == [2, 0]
    with pytest.raises(ValueError):
        SymBanded.from_gfs([Poly([1, 1, 1, 1])], 3)


def test_json_round_trip():
    m = build_w_ar1(0.25, 4)
    obj = json.loads(json.dumps(m.to_dict()))
    assert obj["dim"] == 5 and obj["half_bw"] == 1
    assert SymBanded.from_dict(obj).allclose(m, atol=0)
    obj["half_bw"] = 2
    with pytest.raises(ValueError):
        SymBanded.from_dict(obj)
