"""Existence tests and constructions for ``W = A * B``.

Every construction starts from a split ``C_M = p q`` of a ones-polynomial
(see :mod:`ardeconv.polynomials`) and writes the diagonals of ``A`` and
``B`` as generating functions built from ``p`` and ``q``. Constructors
return a :class:`DeconvPair` only after checking the convolution against
the target matrix.

Constructors raise :class:`NoDeconvolution` when the AR parameters admit
no decomposition of the requested shape, and plain ``ValueError`` for
malformed input (bad masks, sizes).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .armodels import _as_ar, build_w_ar1, build_w_ar2
from .banded import SymBanded, conv_banded, diag_gf, to_dense
from .polynomials import (
    FactorSet,
    Poly,
    SplitMask,
    factor_ones_poly,
    is_nonneg_split,
    ones_poly,
    poly_divrem,
    split_from_mask,
)

PARAM_TOL = 1e-12
RESIDUAL_TOL = 1e-9
NONNEG_TOL = 1e-9

ONE_PLUS_T = Poly([1.0, 1.0])

CASE_TAGS = (
    "AR1_PHI_PM1",
    "AR2_TRI_PHI2_NEG1",
    "AR2_TRI_PHI1_0_PHI2_1",
    "AR2_PENTA_PHI2_NEG1",
    "AR2_PENTA_PHI1_0_PHI2_1",
    "AR2_B1",
    "ARP_DIAG_B_NONE",
)
SHAPES = ("TRI_X_DIAG", "TRI_X_TRI", "PENTA_X_DIAG")


@dataclass(frozen=True)
class DeconvDecision:
    """Outcome of an existence test.

    ``exists`` is ``None`` when only necessary conditions could be checked
    and they all hold.
    """

    exists: Optional[bool]
    case_tag: Optional[str]
    reason: str
    witness: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "exists": self.exists,
            "case_tag": self.case_tag,
            "reason": self.reason,
            "witness": self.witness,
        }


class NoDeconvolution(ValueError):
    """The parameters admit no decomposition of the requested kind."""

    def __init__(self, decision: DeconvDecision):
        super().__init__(decision.reason)
        self.decision = decision


@dataclass(frozen=True, eq=False)
class DeconvPair:
    A: SymBanded
    B: SymBanded
    shape: str
    mask: SplitMask
    branch: Optional[int] = None
    nonneg_requested: bool = False
    case_tag: Optional[str] = None
    residual: float = 0.0

    def to_dict(self) -> dict:
        return {
            "A": self.A.to_dict(),
            "B": self.B.to_dict(),
            "shape": self.shape,
            "mask": str(self.mask),
            "branch": self.branch,
            "residual": self.residual,
        }


def _close(x: float, y: float) -> bool:
    return abs(x - y) <= PARAM_TOL


def _certify(A, B, target, **meta) -> DeconvPair:
    conv = to_dense(conv_banded(A, B))
    if conv.shape != (target.dim, target.dim):
        raise RuntimeError(f"convolution has shape {conv.shape}, target has dim {target.dim}")
    residual = float(np.max(np.abs(conv - to_dense(target))))
    if residual > RESIDUAL_TOL:
        raise RuntimeError(f"construction failed the convolution check (residual {residual:g})")
    return DeconvPair(A, B, residual=residual, **meta)


def _resolve_mask(fs: FactorSet, mask) -> SplitMask:
    if mask is None:
        return SplitMask.empty(len(fs))
    if isinstance(mask, str):
        mask = SplitMask.from_string(mask)
    if len(mask) != len(fs):
        raise ValueError(
            f"mask {mask} has {len(mask)} bits but C_{fs.modulus} has {len(fs)} factors"
        )
    return mask


def _split(M: int, mask, nonneg: bool = False):
    fs = factor_ones_poly(M)
    mask = _resolve_mask(fs, mask)
    p, q = split_from_mask(fs, mask)
    if nonneg and not is_nonneg_split(fs, mask):
        raise ValueError(f"mask {mask} does not give a split with non-negative coefficients")
    return mask, p, q


# -- AR(1) ---------------------------------------------------------------


def ar1_exists(phi1: float) -> DeconvDecision:
    if phi1 == 0.0:
        raise ValueError("phi1 must be nonzero")
    r0 = 1.0 - phi1**2
    if _close(abs(phi1), 1.0):
        return DeconvDecision(True, "AR1_PHI_PM1", "|phi1| = 1", 0.0)
    return DeconvDecision(False, None, "|phi1| != 1: remainder r_0 = 1 - phi1^2 is nonzero", r0)


def ar1_deconv(phi1: float, W: int, mask=None, nonneg: bool = False) -> DeconvPair:
    """Tridiagonal ``A`` and diagonal ``B`` with ``a_0 = (t+1)p``, ``a_1 = -phi1 p``, ``b_0 = q``."""
    if W < 2:
        raise ValueError("ar1_deconv needs W >= 2")
    decision = ar1_exists(phi1)
    if not decision.exists:
        raise NoDeconvolution(decision)
    mask, p, q = _split(W - 1, mask, nonneg)
    dim_a = p.degree + 2
    A = SymBanded.from_gfs([ONE_PLUS_T * p, -phi1 * p], dim_a)
    B = SymBanded.from_gfs([q], q.degree + 1)
    return _certify(A, B, build_w_ar1(phi1, W), shape="TRI_X_DIAG", mask=mask,
                    nonneg_requested=nonneg, case_tag=decision.case_tag)


# -- AR(2), both factors tridiagonal -------------------------------------


def ar2_tri_exists(phi1: float, phi2: float) -> DeconvDecision:
    if phi2 == 0.0:
        raise ValueError("phi2 must be nonzero")
    if _close(phi2, -1.0):
        if abs(phi1) >= 2.0 - PARAM_TOL:
            return DeconvDecision(True, "AR2_TRI_PHI2_NEG1", "phi2 = -1 and |phi1| >= 2", 0.0)
        return DeconvDecision(
            False, None, "phi2 = -1 but |phi1| < 2: z^2 + phi1 z + 1 has no real roots",
            abs(phi1) - 2.0,
        )
    if _close(phi2, 1.0) and _close(phi1, 0.0):
        return DeconvDecision(True, "AR2_TRI_PHI1_0_PHI2_1", "phi1 = 0 and phi2 = 1", 0.0)
    return DeconvDecision(
        False, None, "phi2 != -1 and (phi1, phi2) != (0, 1)", phi2 + 1.0
    )


def _z_roots(phi1: float) -> tuple[float, float]:
    """Real roots ``z1 >= z2`` of ``z^2 + phi1 z + 1``."""
    disc = np.sqrt(max(phi1**2 - 4.0, 0.0))
    return (-phi1 + disc) / 2.0, (-phi1 - disc) / 2.0


def _tri_tri_gfs(decision, phi1, p, q, branch):
    if decision.case_tag == "AR2_TRI_PHI2_NEG1":
        z1, z2 = _z_roots(phi1)
        if branch == 2:
            z1, z2 = z2, z1
        return (Poly([z2, z1]) * p, p), (Poly([z1, z2]) * q, q)
    return (ONE_PLUS_T * p, p), (ONE_PLUS_T * q, -q)


def ar2_tri_deconv(phi1: float, phi2: float, W: int, mask=None, branch: int = 1,
                   nonneg: bool = False) -> DeconvPair:
    """Two tridiagonal factors.

    For ``phi2 = -1`` the diagonals are ``a_0 = (z2 + z1 t)p``, ``a_1 = p``,
    ``b_0 = (z1 + z2 t)q``, ``b_1 = q`` with ``z1, z2`` the roots of
    ``z^2 + phi1 z + 1``; ``branch=2`` swaps the roots. For
    ``(phi1, phi2) = (0, 1)`` they are ``(1+t)p, p`` and ``(1+t)q, -q``.
    """
    if W < 3:
        raise ValueError("ar2_tri_deconv needs W >= 3")
    if branch not in (1, 2):
        raise ValueError("branch must be 1 or 2")
    decision = ar2_tri_exists(phi1, phi2)
    if not decision.exists:
        raise NoDeconvolution(decision)
    mask, p, q = _split(W - 2, mask, nonneg)
    (a0, a1), (b0, b1) = _tri_tri_gfs(decision, phi1, p, q, branch)
    if nonneg and decision.case_tag == "AR2_TRI_PHI2_NEG1" and phi1 > 0:
        # roots are negative here; flipping the sign of both factors keeps A * B
        a0, a1, b0, b1 = -a0, -a1, -b0, -b1
    A = SymBanded.from_gfs([a0, a1], p.degree + 2)
    B = SymBanded.from_gfs([b0, b1], q.degree + 2)
    return _certify(A, B, build_w_ar2(phi1, phi2, W), shape="TRI_X_TRI", mask=mask,
                    branch=branch, nonneg_requested=nonneg, case_tag=decision.case_tag)


# -- AR(2), five-diagonal A and diagonal B -------------------------------


def ar2_penta_exists(phi1: float, phi2: float) -> DeconvDecision:
    if phi2 == 0.0:
        raise ValueError("phi2 must be nonzero")
    if _close(phi2, -1.0):
        return DeconvDecision(True, "AR2_PENTA_PHI2_NEG1", "phi2 = -1", 0.0)
    if _close(phi2, 1.0) and _close(phi1, 0.0):
        return DeconvDecision(True, "AR2_PENTA_PHI1_0_PHI2_1", "phi1 = 0 and phi2 = 1", 0.0)
    r1 = -phi1 * (1.0 + phi2)
    if abs(r1) > PARAM_TOL:
        return DeconvDecision(False, None, "remainder r_1 = -phi1 (1 + phi2) is nonzero", r1)
    return DeconvDecision(
        False, None, "remainder r_0 = (1 - phi2^2)(t + 1) is nonzero", 1.0 - phi2**2
    )


def ar2_penta_deconv(phi1: float, phi2: float, W: int, mask=None,
                     nonneg: bool = False) -> DeconvPair:
    """Five-diagonal ``A`` and diagonal ``B = diag(q)``.

    ``phi2 = -1``: ``a_2 = p``, ``a_1 = -phi1 (t+1) p``, ``a_0 = (t^2 + phi1^2 t + 1) p``.
    ``(0, 1)``: ``a_2 = -p``, ``a_1 = 0``, ``a_0 = (t^2 + 1) p``.
    """
    if W < 4:
        raise ValueError("ar2_penta_deconv needs W >= 4")
    decision = ar2_penta_exists(phi1, phi2)
    if not decision.exists:
        raise NoDeconvolution(decision)
    mask, p, q = _split(W - 2, mask, nonneg)
    if q.degree < 2:
        raise ValueError("B must have size > 2: the split needs deg q >= 2")
    if decision.case_tag == "AR2_PENTA_PHI2_NEG1":
        gfs = [Poly([1.0, phi1**2, 1.0]) * p, -phi1 * ONE_PLUS_T * p, p]
    else:
        gfs = [Poly([1.0, 0.0, 1.0]) * p, Poly(), -p]
    A = SymBanded.from_gfs(gfs, p.degree + 3)
    B = SymBanded.from_gfs([q], q.degree + 1)
    return _certify(A, B, build_w_ar2(phi1, phi2, W), shape="PENTA_X_DIAG", mask=mask,
                    nonneg_requested=nonneg, case_tag=decision.case_tag)


def ar2_b1_exists(phi1: float, phi2: float, W: int) -> DeconvDecision:
    """Decomposition with ``B`` of size 2 (``b_0 = 1 + t``)."""
    if W % 2 == 0:
        return DeconvDecision(False, None, "(1+t) does not divide C_{W-2} for even W", None)
    w1_at_minus1 = float(diag_gf(build_w_ar2(phi1, phi2, W), 1)(-1.0))
    if abs(w1_at_minus1) > PARAM_TOL:
        return DeconvDecision(
            False, None, "w_1(-1) != 0: (1+t) does not divide w_1", w1_at_minus1
        )
    return DeconvDecision(True, "AR2_B1", "W odd and w_1(-1) = 0", 0.0)


def ar2_b1_deconv(phi1: float, phi2: float, W: int) -> DeconvPair:
    """``b_0 = 1 + t`` and ``a_k = w_k / (1 + t)``; needs odd ``W`` and ``w_1(-1) = 0``."""
    if W < 3:
        raise ValueError("ar2_b1_deconv needs W >= 3")
    if W % 2 == 0:
        raise ValueError("(1+t) does not divide C_{W-2} for even W")
    decision = ar2_b1_exists(phi1, phi2, W)
    if not decision.exists:
        raise NoDeconvolution(decision)
    target = build_w_ar2(phi1, phi2, W)
    gfs = []
    for k in range(3):
        quo, rem = poly_divrem(diag_gf(target, k), ONE_PLUS_T)
        if not rem.allclose(Poly(), atol=RESIDUAL_TOL):
            raise RuntimeError(f"w_{k} is not divisible by 1 + t")
        gfs.append(quo)
    A = SymBanded.from_gfs(gfs, W)
    B = SymBanded.diagonal([1.0, 1.0])
    return _certify(A, B, target, shape="PENTA_X_DIAG", mask=SplitMask(()),
                    case_tag=decision.case_tag)


# -- non-negative definiteness -------------------------------------------


def tridiag_quadform(p: Poly, beta: float, z) -> float:
    """``z' A z = sum_i c_i (z_i + beta z_{i+1})^2``.

    ``A`` has ``a_0 = (1 + beta^2 t) p`` and ``a_1 = beta p``; for
    ``beta = +-1`` this is the AR(1) factor ``(t+1)p, +-p``.
    """
    c = p.coeffs
    z = np.asarray(z, dtype=float)
    if len(z) != p.degree + 2:
        raise ValueError(f"z must have length deg p + 2 = {p.degree + 2}")
    return float(np.sum(c * (z[:-1] + beta * z[1:]) ** 2))


def tridiag_from_poly(p: Poly, beta: float) -> SymBanded:
    return SymBanded.from_gfs([Poly([1.0, beta**2]) * p, beta * p], p.degree + 2)


def pentadiag_quadform(p: Poly, beta: float, z) -> float:
    """``z' A z = sum_i c_i (z_i + beta z_{i+1} + z_{i+2})^2``.

    ``A`` has ``a_0 = (t^2 + beta^2 t + 1)p``, ``a_1 = beta (t+1) p`` and
    ``a_2 = p``; non-negative coefficients of ``p`` make it non-negative
    definite for every real ``beta``.
    """
    c = p.coeffs
    z = np.asarray(z, dtype=float)
    if len(z) != p.degree + 3:
        raise ValueError(f"z must have length deg p + 3 = {p.degree + 3}")
    return float(np.sum(c * (z[:-2] + beta * z[1:-1] + z[2:]) ** 2))


def pentadiag_from_poly(p: Poly, beta: float) -> SymBanded:
    return SymBanded.from_gfs(
        [Poly([1.0, beta**2, 1.0]) * p, beta * ONE_PLUS_T * p, p], p.degree + 3
    )


def check_nonneg_definite(m, tol: float = NONNEG_TOL) -> bool:
    dense = to_dense(m) if isinstance(m, SymBanded) else np.asarray(m, dtype=float)
    return bool(np.linalg.eigvalsh(dense).min() >= -tol)


def nonneg_deconv(model: str, params, W: int, mask=None, branch: int = 1) -> DeconvPair:
    """Decomposition with both factors non-negative definite.

    ``model`` is ``"AR1"``, ``"AR2_TRI"`` or ``"AR2_PENTA"``; ``mask`` must
    give a split of the ones-polynomial with non-negative coefficients.
    """
    params = tuple(np.atleast_1d(params).astype(float))
    model = model.upper()
    if model == "AR1":
        if len(params) != 1:
            raise ValueError("AR1 takes one parameter")
        pair = ar1_deconv(params[0], W, mask, nonneg=True)
    elif model == "AR2_TRI":
        if len(params) != 2:
            raise ValueError("AR2_TRI takes two parameters")
        pair = ar2_tri_deconv(params[0], params[1], W, mask, branch, nonneg=True)
    elif model == "AR2_PENTA":
        if len(params) != 2:
            raise ValueError("AR2_PENTA takes two parameters")
        pair = ar2_penta_deconv(params[0], params[1], W, mask, nonneg=True)
    else:
        raise ValueError(f"unknown model {model!r}")
    for name, m in (("A", pair.A), ("B", pair.B)):
        if not check_nonneg_definite(m):
            raise RuntimeError(f"{name} is not non-negative definite")
    return pair


# -- AR(p) with diagonal B -----------------------------------------------


def arp_remainder_closed(ar, k: int) -> Poly:
    """Remainder of ``w_k`` divided by ``C_{W-p}``, independent of ``W >= 2p``.

    ``r_k = sum_{i=0}^{p-k} alpha_i alpha_{i+k} (C_{p-k-i-1} - C_{i-1})``.
    """
    ar = _as_ar(ar)
    p = ar.order
    if not 0 <= k <= p:
        raise ValueError(f"k must lie in 0..{p}")
    a = ar.alpha
    out = Poly()
    for i in range(p - k + 1):
        out = out + a[i] * a[i + k] * (ones_poly(p - k - i - 1) - ones_poly(i - 1))
    return out


def arp_remainder_top(ar) -> Poly:
    """``r_{p-1} = alpha_0 alpha_{p-1} - alpha_1 alpha_p`` (a constant)."""
    a = _as_ar(ar).alpha
    p = len(a) - 1
    return Poly([a[0] * a[p - 1] - a[1] * a[p]])


def arp_remainder_zero(ar) -> Poly:
    """``r_0`` regrouped by powers: coefficient of ``t^m`` sums ``alpha_i^2 - alpha_{p-i}^2``."""
    a = _as_ar(ar).alpha
    p = len(a) - 1
    coeffs = [
        sum(a[i] ** 2 - a[p - i] ** 2 for i in range(min(m, p - m - 1) + 1))
        for m in range(p)
    ]
    return Poly(coeffs)


def arp_diagB_decision(ar) -> DeconvDecision:
    """Necessary conditions for ``W = A * B`` with ``B`` diagonal of size > p.

    All remainders ``r_0 .. r_{p-1}`` must vanish. When they do the result
    has ``exists=None``: the conditions are necessary, not sufficient.
    """
    ar = _as_ar(ar)
    p = ar.order
    lead = 1.0 - ar.phi[-1] ** 2
    if abs(lead) > PARAM_TOL:
        return DeconvDecision(
            False, "ARP_DIAG_B_NONE",
            f"coefficient of t^{p - 1} in r_0 is 1 - phi_p^2 != 0", lead,
        )
    for k in range(p):
        r = arp_remainder_closed(ar, k)
        big = np.flatnonzero(np.abs(r.coeffs) > PARAM_TOL)
        if big.size:
            return DeconvDecision(
                False, "ARP_DIAG_B_NONE",
                f"remainder r_{k} has nonzero coefficient of t^{big[0]}",
                float(r.coeffs[big[0]]),
            )
    return DeconvDecision(None, "ARP_DIAG_B_NONE", "necessary conditions hold", 0.0)
