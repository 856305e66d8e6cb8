import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import polynomial as npoly

from ardeconv.polynomials import (
    Poly,
    SplitMask,
    all_masks,
    count_real_splits,
    enumerate_nonneg_splits,
    factor_ones_poly,
    is_nonneg_split,
    ones_poly,
    ordered_factorizations,
    poly_divrem,
    poly_eval,
    poly_mul,
    split_from_mask,
)
from oracles import brute_nonneg_splits, ordered_factorizations_brute

coeff_lists = st.lists(st.floats(-10, 10, allow_nan=False), min_size=1, max_size=8)


def test_trailing_zeros_trimmed():
    assert Poly([1, 2, 0, 0]).degree == 1
    assert Poly([0, 0]).is_zero()
    assert Poly().degree == -1


def test_poly_is_immutable():
    p = Poly([1, 2])
    with pytest.raises(ValueError):
        p.coeffs[0] = 5


def test_mul_examples():
    assert poly_mul(Poly([1, 1]), Poly([1])) == Poly([1, 1])
    assert poly_mul(Poly([1, 1]), Poly([1, 0, 1])) == ones_poly(3)
    assert poly_mul(Poly([1, 2]), Poly([3, 1])) == Poly([3, 7, 2])
    assert (Poly([1, 2]) * Poly()).is_zero()


def test_divrem_examples():
    q, r = poly_divrem(ones_poly(3), Poly([1, 1]))
    assert q.allclose(Poly([1, 0, 1])) and r.is_zero()
    # w_0 of AR(1) with phi1 = 0.5 and W = 4: [1, 1.25, 1.25, 1.25, 1]
    w0 = Poly([1, 1.25, 1.25, 1.25, 1])
    q, r = poly_divrem(w0, ones_poly(3))
    assert r.allclose(Poly([0.75]), atol=1e-15)
    p = Poly([2, -1, 3])
    q, r = poly_divrem(p, p)
    assert q.allclose(Poly([1])) and r.is_zero()


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError, match="division by zero polynomial"):
        poly_divrem(Poly([1, 2]), Poly())


def test_divrem_low_degree_numerator():
    q, r = poly_divrem(Poly([3]), Poly([1, 1]))
    assert q.is_zero() and r == Poly([3])


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists.filter(lambda c: abs(c[-1]) > 0.1))
def test_divrem_matches_numpy(num, den):
    q, r = poly_divrem(Poly(num), Poly(den))
    q_ref, r_ref = npoly.polydiv(num, den)
    assert Poly(q_ref).allclose(q, atol=1e-6)
    assert Poly(r_ref).allclose(r, atol=1e-6)
    assert r.degree < Poly(den).degree or r.is_zero()


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists)
def test_mul_matches_numpy(a, b):
    assert Poly(npoly.polymul(a, b)).allclose(Poly(a) * Poly(b), atol=1e-9)


def test_eval_examples():
    for M in range(6):
        assert poly_eval(ones_poly(M), 1.0) == M + 1
    assert abs(poly_eval(ones_poly(3), 1j)) < 1e-15
    assert Poly([1, 2])(3) == 7


def test_ones_poly():
    assert ones_poly(0) == Poly([1])
    assert ones_poly(3).tolist() == [1, 1, 1, 1]
    assert ones_poly(-1).is_zero()
    with pytest.raises(ValueError):
        ones_poly(-2)


def test_factor_examples():
    assert [f.tolist() for f in factor_ones_poly(1).factors] == [[1, 1]]
    fs = factor_ones_poly(3)
    assert [f.tolist() for f in fs.factors] == [[1, 1], [1, 0, 1]]
    fs = factor_ones_poly(2)
    assert not fs.linear_factor_present
    assert [f.tolist() for f in fs.factors] == [[1, 1, 1]]


@pytest.mark.parametrize("M", range(1, 30))
def test_factors_multiply_back(M):
    fs = factor_ones_poly(M)
    assert len(fs) == M // 2 + M % 2
    prod = Poly([1])
    for f in fs.factors:
        prod = prod * f
    assert prod.allclose(ones_poly(M), atol=1e-9)
    # every factor vanishes at its root of unity
    for k, theta in enumerate(fs.quadratic_angles, start=1):
        assert abs(poly_eval(ones_poly(M), np.exp(1j * theta))) < 1e-9
        assert theta == pytest.approx(2 * np.pi * k / (M + 1))


def test_factor_large_modulus():
    # the product check is ill-conditioned here; the root check is not
    fs = factor_ones_poly(200)
    assert len(fs) == 100 and not fs.linear_factor_present


def test_split_examples():
    fs = factor_ones_poly(3)
    p, q = split_from_mask(fs, SplitMask.empty(2))
    assert p == Poly([1]) and q == ones_poly(3)
    p, q = split_from_mask(fs, SplitMask.from_string("10"))
    assert p == Poly([1, 1]) and q == Poly([1, 0, 1])
    with pytest.raises(ValueError, match="q must have degree >= 1"):
        split_from_mask(fs, SplitMask.from_string("11"))


def test_mask_parsing():
    assert str(SplitMask.from_string("0110")) == "0110"
    assert SplitMask.from_indices(3, [2]) == SplitMask.from_string("001")
    assert SplitMask.from_string("01").complement() == SplitMask.from_string("10")
    with pytest.raises(ValueError):
        SplitMask.from_string("012")
    with pytest.raises(ValueError):
        split_from_mask(factor_ones_poly(3), SplitMask.from_string("1"))


@pytest.mark.parametrize("M", range(1, 16))
def test_every_split_multiplies_back(M):
    fs = factor_ones_poly(M)
    for mask in all_masks(fs):
        p, q = split_from_mask(fs, mask)
        assert (p * q).allclose(ones_poly(M), atol=1e-9)
        assert q.degree >= 1
        assert p(0.0) == pytest.approx(1.0) and q(0.0) == pytest.approx(1.0)


def test_count_real_splits():
    assert count_real_splits(2) == 1
    assert count_real_splits(4) == 3
    assert count_real_splits(5) == 3
    for W in range(2, 20):
        assert count_real_splits(W) == len(all_masks(factor_ones_poly(W - 1)))
    with pytest.raises(ValueError):
        count_real_splits(1)


def test_nonneg_split_examples():
    masks = enumerate_nonneg_splits(3)
    assert len(masks) == 2 == ordered_factorizations(4)
    fs = factor_ones_poly(3)
    pairs = {(tuple(p.tolist()), tuple(q.tolist())) for p, q in
             (split_from_mask(fs, m) for m in masks)}
    assert pairs == {((1.0,), (1.0, 1.0, 1.0, 1.0)), ((1.0, 0.0, 1.0), (1.0, 1.0))}
    assert [str(m) for m in enumerate_nonneg_splits(4)] == ["00"]
    assert len(enumerate_nonneg_splits(1)) == 1


@pytest.mark.parametrize("M", range(1, 18))
def test_nonneg_splits_match_brute_force(M):
    ordered = enumerate_nonneg_splits(M, ordered=True)
    brute = brute_nonneg_splits(M)
    assert len(ordered) == len(brute)
    fs = factor_ones_poly(M)
    got = sorted((tuple(np.round(p.coeffs, 9)), tuple(np.round(q.coeffs, 9)))
                 for p, q in (split_from_mask(fs, m) for m in ordered))
    ref = sorted((tuple(p), tuple(q)) for p, q in brute)
    assert got == ref
    assert all(is_nonneg_split(fs, m) for m in ordered)


@pytest.mark.parametrize("M", range(1, 30))
def test_canonical_splits_halve_ordered(M):
    canon = enumerate_nonneg_splits(M)
    ordered = enumerate_nonneg_splits(M, ordered=True)
    assert 2 * len(canon) - 1 == len(ordered)
    assert set(map(str, canon)) <= set(map(str, ordered))


def test_ordered_factorizations():
    assert ordered_factorizations(4) == 2
    assert ordered_factorizations(6) == 3
    assert ordered_factorizations(5) == 1
    for n in range(2, 80):
        assert ordered_factorizations(n) == ordered_factorizations_brute(n)
    with pytest.raises(ValueError):
        ordered_factorizations(1)
