"""Randomized property checks over the whole library.

Each ``check_*`` function returns a :class:`CheckResult`; :func:`run_all`
runs them in order with fixed seeds, so results are reproducible. The
``ardeconv verify`` command prints one line per check.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .armodels import ArParams, autocov_ar, build_w, sample_stationary
from .banded import SymBanded, conv_banded, conv_dense, diag_gf, gf_matrix_eval, to_dense
from .deconv import (
    ar1_deconv,
    ar1_exists,
    ar2_b1_deconv,
    ar2_penta_deconv,
    ar2_penta_exists,
    ar2_tri_deconv,
    ar2_tri_exists,
    arp_remainder_closed,
    arp_remainder_top,
    arp_remainder_zero,
    nonneg_deconv,
)
from .hslra import theorem1_check
from .polynomials import (
    Poly,
    all_masks,
    count_real_splits,
    enumerate_nonneg_splits,
    factor_ones_poly,
    ones_poly,
    ordered_factorizations,
    poly_divrem,
    split_from_mask,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def random_banded(rng, max_dim=8, max_bw=3) -> SymBanded:
    dim = int(rng.integers(1, max_dim + 1))
    bw = int(rng.integers(0, min(max_bw, dim - 1) + 1))
    return SymBanded(dim, tuple(rng.uniform(-1, 1, dim - k) for k in range(bw + 1)))


def random_banded_pairs(seed=1, n=200):
    rng = np.random.default_rng(seed)
    return [(random_banded(rng), random_banded(rng)) for _ in range(n)]


def _is_integer_poly(p: Poly) -> bool:
    return bool(np.all(p.coeffs == np.round(p.coeffs)))


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def random_stationary_ar2(rng) -> tuple[float, float]:
    while True:
        phi1, phi2 = rng.uniform(-2, 2), rng.uniform(-1, 1)
        if phi2 != 0.0 and phi2 + abs(phi1) < 1.0:
            return phi1, phi2


def check_conv_oracle(tol=1e-12) -> CheckResult:
    """Diagonal-wise convolution equals the dense double sum."""
    err = max(
        np.max(np.abs(to_dense(conv_banded(a, b)) - conv_dense(to_dense(a), to_dense(b))))
        for a, b in random_banded_pairs()
    )
    return CheckResult("conv_oracle", err <= tol, f"max abs error {err:.3g} (tol {tol:g})")


def check_gf_multiplicative(tol=1e-9) -> CheckResult:
    """``G_C(t, s) = G_A(t, s) G_B(t, s)`` at random points of the unit polydisk.

    The error is measured relative to ``G_|A|(|t|,|s|) G_|B|(|t|,|s|)``,
    the magnitude of the summed terms, so cancellation near a zero of the
    product does not inflate it.
    """
    rng = np.random.default_rng(2)
    worst = 0.0
    for a, b in random_banded_pairs():
        c = conv_banded(a, b)
        abs_a = SymBanded(a.dim, tuple(np.abs(d) for d in a.diagonals))
        abs_b = SymBanded(b.dim, tuple(np.abs(d) for d in b.diagonals))
        for _ in range(10):
            t, s = np.sqrt(rng.random(2)) * np.exp(2j * np.pi * rng.random(2))
            lhs = gf_matrix_eval(c, t, s)
            rhs = gf_matrix_eval(a, t, s) * gf_matrix_eval(b, t, s)
            scale = gf_matrix_eval(abs_a, abs(t), abs(s)) * gf_matrix_eval(abs_b, abs(t), abs(s))
            worst = max(worst, abs(lhs - rhs) / max(scale, 1e-300))
    return CheckResult("gf_multiplicative", worst <= tol, f"max relative error {worst:.3g} (tol {tol:g})")


def check_inverse_identity(tol=1e-8) -> CheckResult:
    """Banded ``W`` times the Yule-Walker autocovariance is the identity."""
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(100):
        p = int(rng.integers(1, 5))
        ar = sample_stationary(p, rng)
        W = int(rng.integers(2 * p, 41))
        err = np.max(np.abs(to_dense(build_w(ar, W)) @ autocov_ar(ar, W) - np.eye(W + 1)))
        worst = max(worst, err)
    return CheckResult("inverse_identity", worst <= tol, f"max |W Sigma - I| {worst:.3g} (tol {tol:g})")


def check_ar1_pairs(tol=1e-9) -> CheckResult:
    """All splits of ``C_{W-1}`` give distinct pairs for ``|phi1| = 1``.

    Pairs built from integer splits must have residual exactly 0; splits
    with irrational coefficients are held to ``tol``.
    """
    problems = []
    n_exact = n_irrational = 0
    worst_irrational = 0.0
    for W in range(2, 15):
        fs = factor_ones_poly(W - 1)
        for phi1 in (-1.0, 1.0):
            seen = set()
            for mask in all_masks(fs):
                pair = ar1_deconv(phi1, W, mask)
                p, q = split_from_mask(fs, mask)
                if _is_integer_poly(p) and _is_integer_poly(q):
                    n_exact += 1
                    if pair.residual != 0.0:
                        problems.append(f"W={W} phi1={phi1} mask={mask} residual={pair.residual:g}")
                else:
                    n_irrational += 1
                    worst_irrational = max(worst_irrational, pair.residual)
                    if pair.residual > tol:
                        problems.append(f"W={W} phi1={phi1} mask={mask} residual={pair.residual:g}")
                key = (to_dense(pair.A).round(9).tobytes(), to_dense(pair.B).round(9).tobytes())
                seen.add(key)
            if len(seen) != count_real_splits(W):
                problems.append(f"W={W} phi1={phi1}: {len(seen)} pairs, expected {count_real_splits(W)}")
    rng = np.random.default_rng(4)
    draws = rng.uniform(-3, 3, 1000)
    draws = draws[(np.abs(np.abs(draws) - 1) > 1e-9) & (draws != 0)]
    false_pos = sum(bool(ar1_exists(x).exists) for x in draws)
    if false_pos:
        problems.append(f"{false_pos} random phi1 reported as decomposable")
    ok = not problems
    detail = (
        f"2^floor(W/2)-1 distinct pairs for W=2..14; {n_exact} integer-split pairs with residual 0, "
        f"{n_irrational} irrational-split pairs with max residual {worst_irrational:.3g} (tol {tol:g}); "
        f"{len(draws)} random phi1 rejected"
    )
    return CheckResult("ar1_pairs", ok, detail if ok else "; ".join(problems[:3]))


AR2_POINTS = ((2.0, -1.0), (-2.0, -1.0), (3.0, -1.0), (-3.0, -1.0), (0.0, 1.0), (0.5, -1.0))


def check_ar2_pairs(tol=1e-9) -> CheckResult:
    """Tridiagonal, five-diagonal and size-2 ``B`` constructions on the critical parameters.

    Residuals must be exactly zero whenever every coefficient involved is a
    dyadic rational: integer splits, and all parameters except the
    irrational roots used by the tridiagonal construction at ``|phi1| = 3``.
    """
    problems = []
    n_pairs = 0
    for phi1, phi2 in AR2_POINTS:
        for W in range(4, 11):
            fs = factor_ones_poly(W - 2)
            pairs = []
            for mask in all_masks(fs):
                p, q = split_from_mask(fs, mask)
                exact_split = _is_integer_poly(p) and _is_integer_poly(q)
                if ar2_tri_exists(phi1, phi2).exists:
                    for branch in (1, 2):
                        pairs.append((ar2_tri_deconv(phi1, phi2, W, mask, branch), exact_split and abs(phi1) != 3))
                if q.degree >= 2:
                    pairs.append((ar2_penta_deconv(phi1, phi2, W, mask), exact_split))
            if W % 2 == 1:
                pairs.append((ar2_b1_deconv(phi1, phi2, W), True))
            for pair, exact in pairs:
                n_pairs += 1
                if pair.residual > tol or (exact and pair.residual != 0.0):
                    problems.append(f"({phi1},{phi2}) W={W} {pair.shape} residual {pair.residual:g}")
    rng = np.random.default_rng(5)
    false_pos = 0
    for _ in range(1000):
        phi1, phi2 = random_stationary_ar2(rng)
        false_pos += bool(ar2_tri_exists(phi1, phi2).exists) + bool(ar2_penta_exists(phi1, phi2).exists)
    if false_pos:
        problems.append(f"{false_pos} stationary draws reported as decomposable")
    ok = not problems
    return CheckResult("ar2_pairs", ok, f"{n_pairs} pairs certified, stationary draws all rejected" if ok else "; ".join(problems[:3]))


def check_nonneg_census() -> CheckResult:
    problems = []
    for W in range(2, 31):
        M = W - 1
        fs = factor_ones_poly(M)
        masks = enumerate_nonneg_splits(M)
        if len(masks) != ordered_factorizations(W):
            problems.append(f"W={W}: {len(masks)} splits, H(W)={ordered_factorizations(W)}")
        nonconst = any(not split_from_mask(fs, m)[0].is_constant() for m in masks)
        if nonconst == _is_prime(W):
            problems.append(f"W={W}: non-constant split presence {nonconst} vs composite {not _is_prime(W)}")
        for m in enumerate_nonneg_splits(M, ordered=True):
            for poly in split_from_mask(fs, m):
                if not np.all(np.isin(poly.coeffs, (0.0, 1.0))):
                    problems.append(f"W={W} mask={m}: coefficients {poly.tolist()}")
    ok = not problems
    return CheckResult("nonneg_census", ok, "counts equal H(W) for W=2..30, all 0/1" if ok else "; ".join(problems[:3]))


def nonneg_cases(max_W=12):
    """Parameter/size/mask combinations covered by the non-negative constructions."""
    for W in range(2, max_W + 1):
        for phi1 in (1.0, -1.0):
            for mask in enumerate_nonneg_splits(W - 1, ordered=True):
                yield "AR1", (phi1,), W, mask, 1
    for W in range(3, max_W + 1):
        for params in ((2.0, -1.0), (-2.0, -1.0), (0.0, 1.0)):
            for mask in enumerate_nonneg_splits(W - 2, ordered=True):
                for branch in (1, 2):
                    yield "AR2_TRI", params, W, mask, branch
    for W in range(4, max_W + 1):
        fs = factor_ones_poly(W - 2)
        for params in ((-1.0, -1.0), (-0.5, -1.0), (0.0, -1.0), (0.5, -1.0), (1.0, -1.0), (0.0, 1.0)):
            for mask in enumerate_nonneg_splits(W - 2, ordered=True):
                if split_from_mask(fs, mask)[1].degree >= 2:
                    yield "AR2_PENTA", params, W, mask, 1


def check_nonneg_pairs(tol=1e-9) -> CheckResult:
    worst = np.inf
    count = 0
    for model, params, W, mask, branch in nonneg_cases():
        pair = nonneg_deconv(model, params, W, mask, branch)
        for m in (pair.A, pair.B):
            worst = min(worst, float(np.linalg.eigvalsh(to_dense(m)).min()))
        count += 1
    ok = worst >= -tol
    return CheckResult("nonneg_pairs", ok, f"{count} pairs, min eigenvalue {worst:.3g} (tol -{tol:g})")


def check_remainders(tol=1e-10) -> CheckResult:
    rng = np.random.default_rng(7)
    worst = 0.0
    problems = []
    for _ in range(200):
        p = int(rng.integers(1, 7))
        ar = ArParams(tuple(rng.uniform(-1.5, 1.5, p)))
        W = int(rng.integers(2 * p, 21))
        w = build_w(ar, W)
        for k in range(p + 1):
            _, rem = poly_divrem(diag_gf(w, k), ones_poly(W - p))
            closed = arp_remainder_closed(ar, k)
            n = max(len(rem.coeffs), len(closed.coeffs))
            worst = max(worst, float(np.max(np.abs(rem.padded(n) - closed.padded(n)), initial=0.0)))
        if not arp_remainder_closed(ar, p).is_zero():
            problems.append(f"r_p nonzero for {ar.phi}")
        if not arp_remainder_zero(ar).allclose(arp_remainder_closed(ar, 0), 1e-12):
            problems.append(f"regrouped r_0 differs for {ar.phi}")
        if not arp_remainder_top(ar).allclose(arp_remainder_closed(ar, p - 1), 1e-12):
            problems.append(f"r_(p-1) differs for {ar.phi}")
    for _ in range(100):
        p = int(rng.integers(1, 7))
        ar = ArParams(tuple(rng.uniform(-1.5, 1.5, p)))
        lead = arp_remainder_closed(ar, 0).padded(p)[p - 1]
        if lead != 1.0 - ar.phi[-1] ** 2:
            problems.append(f"t^(p-1) coefficient {lead!r} != 1 - phi_p^2 for {ar.phi}")
    ok = worst <= tol and not problems
    detail = f"max |closed - division| {worst:.3g} (tol {tol:g})"
    return CheckResult("remainders", ok, detail if not problems else detail + "; " + "; ".join(problems[:3]))


def _random_sym(rng, n):
    m = rng.uniform(-1, 1, (n, n))
    return (m + m.T) / 2


def check_norm_equivalence(tol=1e-10, probe_min=1e-3) -> CheckResult:
    """Matrix norm of the trajectory matrix equals the convolution-weighted vector norm.

    The probe adds 0.1 to the diagonal entry of ``W`` where ``|z_i|`` is
    largest and expects the two norms to disagree.
    """
    rng = np.random.default_rng(8)
    worst = 0.0
    weakest_probe = np.inf
    for _ in range(200):
        N = int(rng.integers(3, 21))
        L = int(rng.integers(2, N))
        K = N - L + 1
        z = rng.standard_normal(N)
        Lm, Rm = _random_sym(rng, L), _random_sym(rng, K)
        rep = theorem1_check(z, Lm, Rm)
        worst = max(worst, rep.rel_diff)
        i = int(np.argmax(np.abs(z)))
        Wp = rep.W_used.copy()
        Wp[i, i] += 0.1
        weakest_probe = min(weakest_probe, theorem1_check(z, Lm, Rm, Wp).rel_diff)
    ok = worst <= tol and weakest_probe > probe_min
    return CheckResult(
        "norm_equivalence", ok,
        f"max rel_diff {worst:.3g} (tol {tol:g}); perturbed min rel_diff {weakest_probe:.3g} (> {probe_min:g})",
    )


ALL_CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_conv_oracle,
    check_gf_multiplicative,
    check_inverse_identity,
    check_ar1_pairs,
    check_ar2_pairs,
    check_nonneg_census,
    check_nonneg_pairs,
    check_remainders,
    check_norm_equivalence,
)


def run_all() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
