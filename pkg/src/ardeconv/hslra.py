"""Trajectory matrices and the vector/matrix weighted-norm equivalence.

For a series ``z`` of length ``N`` and window ``L`` the trajectory matrix
``X`` is the ``L x K`` Hankel matrix with ``X[l, k] = z[l + k]``,
``K = N - L + 1``. Its weighted norm ``tr(Lm X Rm X')`` equals ``z' W z``
for every ``z`` exactly when ``W`` is the matrix convolution ``Lm * Rm``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .banded import SymBanded, conv_dense, to_dense


def _dense(m) -> np.ndarray:
    return to_dense(m) if isinstance(m, SymBanded) else np.asarray(m, dtype=float)


def _series(z) -> np.ndarray:
    z = np.asarray(z, dtype=float).reshape(-1)
    if len(z) == 0:
        raise ValueError("series is empty")
    if not np.all(np.isfinite(z)):
        raise ValueError("series values must be finite")
    return z


def trajectory_matrix(z, L: int) -> np.ndarray:
    z = _series(z)
    N = len(z)
    if not 2 <= L <= N - 1:
        raise ValueError(f"window length L={L} must lie in [2, {N - 1}]")
    if L > N / 2:
        warnings.warn(f"L={L} exceeds N/2; HSLRA usually takes 1 < L <= N/2", stacklevel=2)
    return _hankel(z, L)


def _hankel(z: np.ndarray, L: int) -> np.ndarray:
    K = len(z) - L + 1
    return z[np.arange(L)[:, None] + np.arange(K)[None, :]]


def vec_norm_sq(z, W) -> float:
    z = _series(z)
    W = _dense(W)
    if W.shape != (len(z), len(z)):
        raise ValueError(f"W has shape {W.shape}, series has length {len(z)}")
    return float(z @ W @ z)


def mat_norm_sq(X, Lm, Rm) -> float:
    """``tr(Lm X Rm X')``."""
    X = np.asarray(X, dtype=float)
    Lm, Rm = _dense(Lm), _dense(Rm)
    L, K = X.shape
    if Lm.shape != (L, L):
        raise ValueError(f"left weight has shape {Lm.shape}, expected {(L, L)}")
    if Rm.shape != (K, K):
        raise ValueError(f"right weight has shape {Rm.shape}, expected {(K, K)}")
    return float(np.trace(Lm @ X @ Rm @ X.T))


@dataclass(frozen=True)
class NormCheckReport:
    lhs: float
    rhs: float
    abs_diff: float
    rel_diff: float
    W_used: np.ndarray

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_diff": self.abs_diff,
            "rel_diff": self.rel_diff,
            "W_used": self.W_used.tolist(),
        }


def theorem1_check(z, Lm, Rm, W=None) -> NormCheckReport:
    """Compare ``||T_L(z)||^2_{Lm,Rm}`` with ``||z||^2_W``.

    ``W`` defaults to ``Lm * Rm``, for which the two sides agree up to
    rounding; passing another ``W`` probes whether it is a valid weight.
    """
    z = _series(z)
    Lm, Rm = _dense(Lm), _dense(Rm)
    L, K = Lm.shape[0], Rm.shape[0]
    if L + K - 1 != len(z):
        raise ValueError(f"weights of sizes {L} and {K} need a series of length {L + K - 1}")
    W = conv_dense(Lm, Rm) if W is None else _dense(W)
    X = _hankel(z, L)
    lhs = mat_norm_sq(X, Lm, Rm)
    rhs = vec_norm_sq(z, W)
    abs_diff = abs(lhs - rhs)
    rel_diff = abs_diff / max(abs(lhs), abs(rhs), 1.0)
    return NormCheckReport(lhs, rhs, abs_diff, rel_diff, W)
