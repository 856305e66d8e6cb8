"""Inverse autocovariance matrices of autoregressive processes.

The model is ``xi_n = phi_1 xi_{n-1} + ... + phi_p xi_{n-p} + eps_n`` with
unit-variance innovations, or equivalently ``sum_i alpha_i xi_{n-i} = eps_n``
with ``alpha_0 = 1`` and ``alpha_i = -phi_i``. A matrix of "size W" has
``W + 1`` rows, indexed ``0 .. W``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .banded import SymBanded, to_dense
from .polynomials import Poly, monomial, ones_poly


@dataclass(frozen=True)
class ArParams:
    phi: tuple[float, ...]

    def __post_init__(self):
        phi = tuple(float(x) for x in np.atleast_1d(self.phi))
        if not phi:
            raise ValueError("AR order must be at least 1")
        if not all(np.isfinite(phi)):
            raise ValueError("AR coefficients must be finite")
        if phi[-1] == 0.0:
            raise ValueError("last AR coefficient must be nonzero")
        object.__setattr__(self, "phi", phi)

    @property
    def order(self) -> int:
        return len(self.phi)

    @property
    def alpha(self) -> np.ndarray:
        return np.concatenate(([1.0], -np.asarray(self.phi)))


def _as_ar(ar) -> ArParams:
    return ar if isinstance(ar, ArParams) else ArParams(tuple(np.atleast_1d(ar)))


def build_w_ar1(phi1: float, W: int) -> SymBanded:
    """Tridiagonal inverse autocovariance of AR(1), size ``W + 1``."""
    if W < 1:
        raise ValueError("build_w_ar1 needs W >= 1")
    d0 = np.full(W + 1, 1.0 + phi1**2)
    d0[0] = d0[-1] = 1.0
    d1 = np.full(W, -phi1)
    return SymBanded(W + 1, (d0, d1))


def build_w_ar2(phi1: float, phi2: float, W: int) -> SymBanded:
    """Five-diagonal inverse autocovariance of AR(2), size ``W + 1``."""
    if W < 3:
        raise ValueError("build_w_ar2 needs W >= 3")
    k0 = 1.0 + phi1**2 + phi2**2
    k1 = -phi1 + phi1 * phi2
    k22 = 1.0 + phi1**2
    d0 = np.full(W + 1, k0)
    d0[[0, -1]] = 1.0
    d0[[1, -2]] = k22
    d1 = np.full(W, k1)
    d1[[0, -1]] = -phi1
    d2 = np.full(W - 1, -phi2)
    return SymBanded(W + 1, (d0, d1, d2))


def build_w_arp(ar, W: int) -> SymBanded:
    """``(2p + 1)``-diagonal inverse autocovariance of AR(p), size ``W + 1``.

    Near the top-left corner entry ``(i, j)`` sums ``alpha_m alpha_{m+|i-j|}``
    over ``m <= min(i, j)``, mirrored at the bottom-right, and the interior
    uses the full sum over ``m <= p - |i - j|``.
    """
    ar = _as_ar(ar)
    p = ar.order
    if W < 2 * p:
        raise ValueError("matrix too small for order p")
    a = ar.alpha
    diags = []
    for k in range(p + 1):
        d = np.empty(W + 1 - k)
        full = float(np.dot(a[: p - k + 1], a[k:]))
        for i in range(W + 1 - k):
            j = i + k
            if j < p:
                lim = i
            elif i > W - p:
                lim = W - j
            else:
                lim = p - k
            d[i] = np.dot(a[: lim + 1], a[k : k + lim + 1]) if lim < p - k else full
        diags.append(d)
    return SymBanded(W + 1, tuple(diags))


def build_w(ar, W: int) -> SymBanded:
    """Dispatch to the AR(1)/AR(2) closed forms or the general builder."""
    ar = _as_ar(ar)
    if ar.order == 1:
        return build_w_ar1(ar.phi[0], W)
    if ar.order == 2:
        return build_w_ar2(ar.phi[0], ar.phi[1], W)
    return build_w_arp(ar, W)


def is_stationary(ar) -> bool:
    ar = _as_ar(ar)
    phi = ar.phi
    if ar.order == 1:
        return abs(phi[0]) < 1.0
    if ar.order == 2:
        return phi[1] + abs(phi[0]) < 1.0 and abs(phi[1]) < 1.0
    # roots of 1 - phi_1 z - ... - phi_p z^p must lie outside the unit circle
    roots = np.roots(ar.alpha[::-1])
    return bool(np.all(np.abs(roots) > 1.0 + 1e-10))


def autocov_ar(ar, n: int) -> np.ndarray:
    """Toeplitz autocovariance matrix of ``xi_0 .. xi_n`` (unit innovations).

    ``gamma_0 .. gamma_p`` solve the Yule-Walker system; later lags follow
    the recursion ``gamma_k = sum_i phi_i gamma_{k-i}``.
    """
    ar = _as_ar(ar)
    if not is_stationary(ar):
        raise ValueError(f"AR parameters {ar.phi} are not stationary")
    p = ar.order
    phi = np.asarray(ar.phi)
    M = np.eye(p + 1)
    for k in range(p + 1):
        for i in range(1, p + 1):
            M[k, abs(k - i)] -= phi[i - 1]
    rhs = np.zeros(p + 1)
    rhs[0] = 1.0
    gamma = list(np.linalg.solve(M, rhs))
    for k in range(p + 1, n + 1):
        gamma.append(sum(phi[i - 1] * gamma[k - i] for i in range(1, p + 1)))
    g = np.asarray(gamma[: n + 1])
    idx = np.arange(n + 1)
    return g[np.abs(idx[:, None] - idx[None, :])]


def inverse_scale(ar, W: int) -> float:
    """Fitted ``c`` in ``W_matrix = c * Sigma^{-1}``; equals 1 for unit innovations."""
    prod = to_dense(build_w(ar, W)) @ autocov_ar(ar, W)
    return float(np.mean(np.diag(prod)))


def diag_gf_closed(ar, W: int, k: int) -> Poly:
    """Generating function of diagonal ``k`` written through ones-polynomials.

    ``w_k(t) = sum_{i=0}^{p-k} alpha_i alpha_{i+k} t^i C_{W-2i-k}(t)``.
    """
    ar = _as_ar(ar)
    p = ar.order
    if not 0 <= k <= p:
        raise ValueError(f"diagonal {k} is outside 0..{p}")
    if W < 2 * p:
        raise ValueError("matrix too small for order p")
    a = ar.alpha
    out = Poly()
    for i in range(p - k + 1):
        out = out + a[i] * a[i + k] * monomial(i) * ones_poly(W - 2 * i - k)
    return out


def sample_stationary(order: int, rng: np.random.Generator, max_modulus: float = 0.95) -> ArParams:
    """Random stationary AR parameters from reciprocal roots inside a disk."""
    recip = []
    while len(recip) < order:
        if order - len(recip) >= 2 and rng.random() < 0.5:
            r = max_modulus * np.sqrt(rng.random())
            th = rng.uniform(0.0, np.pi)
            z = r * np.exp(1j * th)
            recip += [z, np.conj(z)]
        else:
            recip.append(rng.uniform(-max_modulus, max_modulus))
    coeffs = np.real(np.poly(recip))  # 1, -phi_1, ..., -phi_p
    return ArParams(tuple(-coeffs[1:]))
