"""Symmetric banded matrices and matrix convolution.

Only the main and upper diagonals are stored; ``diagonals[k][j]`` is the
entry ``(j, j + k)``. Dense matrices are plain 2-D numpy arrays.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .polynomials import Poly

BAND_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SymBanded:
    dim: int
    diagonals: tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be positive")
        diags = []
        for k, d in enumerate(self.diagonals):
            d = np.array(d, dtype=float).reshape(-1)
            if len(d) != self.dim - k:
                raise ValueError(
                    f"diagonal {k} has length {len(d)}, expected {self.dim - k}"
                )
            if not np.all(np.isfinite(d)):
                raise ValueError("entries must be finite")
            d.flags.writeable = False
            diags.append(d)
        if not diags:
            raise ValueError("at least the main diagonal is required")
        if len(diags) > self.dim:
            raise ValueError("half_bw must be smaller than dim")
        object.__setattr__(self, "diagonals", tuple(diags))

    @property
    def half_bw(self) -> int:
        return len(self.diagonals) - 1

    def diag(self, k: int) -> np.ndarray:
        """Signed diagonal ``k``; ``diag(-k) == diag(k)`` by symmetry."""
        k = abs(k)
        if k > self.half_bw:
            return np.zeros(max(self.dim - k, 0))
        return self.diagonals[k]

    @classmethod
    def from_gfs(cls, gfs, dim: int) -> "SymBanded":
        """Build from the generating functions of diagonals 0..p."""
        polys = [g if isinstance(g, Poly) else Poly(g) for g in gfs]
        return cls(dim, tuple(g.padded(dim - k) for k, g in enumerate(polys)))

    @classmethod
    def diagonal(cls, values) -> "SymBanded":
        values = np.asarray(values, dtype=float).reshape(-1)
        return cls(len(values), (values,))

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "half_bw": self.half_bw,
            "diagonals": [d.tolist() for d in self.diagonals],
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "SymBanded":
        m = cls(int(obj["dim"]), tuple(obj["diagonals"]))
        if "half_bw" in obj and int(obj["half_bw"]) != m.half_bw:
            raise ValueError("half_bw does not match the number of diagonals")
        return m

    def allclose(self, other: "SymBanded", atol: float = 1e-9) -> bool:
        return self.dim == other.dim and np.allclose(
            to_dense(self), to_dense(other), rtol=0.0, atol=atol
        )

    def __repr__(self):
        return f"SymBanded(dim={self.dim}, diagonals={[d.tolist() for d in self.diagonals]})"


def to_dense(m: SymBanded) -> np.ndarray:
    out = np.zeros((m.dim, m.dim))
    idx = np.arange(m.dim)
    for k, d in enumerate(m.diagonals):
        out[idx[: m.dim - k], idx[k:]] = d
        out[idx[k:], idx[: m.dim - k]] = d
    return out


def from_dense(d, half_bw: int) -> SymBanded:
    d = np.asarray(d, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValueError("matrix must be square")
    n = d.shape[0]
    if not 0 <= half_bw < n:
        raise ValueError(f"half_bw must lie in [0, {n - 1}]")
    if np.max(np.abs(d - d.T), initial=0.0) > BAND_TOL:
        raise ValueError("matrix is not symmetric")
    i, j = np.indices(d.shape)
    if np.max(np.abs(d[np.abs(i - j) > half_bw]), initial=0.0) > BAND_TOL:
        raise ValueError(f"nonzero entries outside band of half-width {half_bw}")
    return SymBanded(n, tuple(np.diagonal(d, k).copy() for k in range(half_bw + 1)))


def conv_dense(a, b) -> np.ndarray:
    """Matrix convolution by the defining double sum."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    for m in (a, b):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("conv_dense needs square matrices")
    na, nb = a.shape[0], b.shape[0]
    c = np.zeros((na + nb - 1, na + nb - 1))
    for k in range(na):
        for l in range(na):
            c[k : k + nb, l : l + nb] += a[k, l] * b
    return c


def pad_exponent(j: int, k: int) -> int:
    """``(|j| + |k| - |j + k|) / 2``: zeros padded around ``diag_j * diag_k``."""
    return (abs(j) + abs(k) - abs(j + k)) // 2


def conv_banded(a: SymBanded, b: SymBanded) -> SymBanded:
    """Convolution assembled diagonal by diagonal from 1-D convolutions."""
    dim = a.dim + b.dim - 1
    pa, pb = a.half_bw, b.half_bw
    diags = []
    for i in range(pa + pb + 1):
        acc = np.zeros(dim - i)
        for j in range(-pa, pa + 1):
            k = i - j
            if abs(k) > pb:
                continue
            m = pad_exponent(j, k)
            acc[m : dim - i - m] += np.convolve(a.diag(j), b.diag(k))
        diags.append(acc)
    return SymBanded(dim, tuple(diags))


def conv_diag_right(a: SymBanded, b_diag) -> SymBanded:
    """Convolution with a diagonal matrix: each diagonal is convolved with ``b_diag``."""
    b_diag = np.asarray(b_diag, dtype=float).reshape(-1)
    if len(b_diag) == 0:
        raise ValueError("b_diag must be non-empty")
    dim = a.dim + len(b_diag) - 1
    return SymBanded(dim, tuple(np.convolve(d, b_diag) for d in a.diagonals))


def diag_gf(m: SymBanded, k: int) -> Poly:
    if not 0 <= k <= m.half_bw:
        raise ValueError(f"diagonal {k} is outside the band (half_bw={m.half_bw})")
    return Poly(m.diagonals[k])


def gf_matrix_eval(m, t, s):
    """Evaluate ``sum_{i,j} m_ij t^i s^j``.

    For :class:`SymBanded` input the sum is regrouped by diagonals,
    ``u_0(ts) + sum_i (t^i + s^i) u_i(ts)``; dense input uses the double sum.
    """
    if isinstance(m, SymBanded):
        ts = t * s
        total = 0.0 * ts
        for i, d in enumerate(m.diagonals):
            ui = np.polyval(d[::-1], ts)
            total = total + (ui if i == 0 else (t**i + s**i) * ui)
        return total
    m = np.asarray(m)
    tp = t ** np.arange(m.shape[0])
    sp = s ** np.arange(m.shape[1])
    return tp @ m @ sp
