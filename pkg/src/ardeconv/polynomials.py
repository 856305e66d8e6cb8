"""Real polynomials, ones-polynomials and their splits.

A polynomial is stored by its coefficients in ascending degree, so
``Poly([1, 2, 3])`` is ``1 + 2t + 3t^2``. The zero polynomial has no
coefficients. Trailing coefficients with magnitude below ``TRIM_TOL`` are
dropped after every operation.

The ones-polynomial ``C_M(t) = 1 + t + ... + t^M`` factors over the reals
into ``(t + 1)`` (when ``M`` is odd) and the quadratics
``t^2 - 2 cos(2 pi k / (M + 1)) t + 1`` for ``k = 1 .. M // 2``. A split
``C_M = p q`` is encoded by a :class:`SplitMask` selecting which of those
factors go into ``p``.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

TRIM_TOL = 1e-12
TOL = 1e-9
# coefficients this close to an integer are snapped to it
SNAP_TOL = 1e-9


def _trim(c: np.ndarray) -> np.ndarray:
    n = len(c)
    while n and abs(c[n - 1]) <= TRIM_TOL:
        n -= 1
    return c[:n]


class Poly:
    """Immutable dense polynomial with real coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = np.array(coeffs, dtype=float).reshape(-1)
        if not np.all(np.isfinite(c)):
            raise ValueError("polynomial coefficients must be finite")
        c = _trim(c).copy()
        c.flags.writeable = False
        self._c = c

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return len(self._c) == 0

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def padded(self, n: int) -> np.ndarray:
        """Coefficients zero-padded to length ``n``."""
        if len(self._c) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        out = np.zeros(n)
        out[: len(self._c)] = self._c
        return out

    def snapped(self, tol: float = SNAP_TOL) -> "Poly":
        """Copy with near-integer coefficients rounded to integers."""
        c = self._c.copy()
        r = np.round(c)
        close = np.abs(c - r) <= tol
        c[close] = r[close]
        return Poly(c)

    def allclose(self, other: "Poly", atol: float = TOL) -> bool:
        n = max(len(self._c), len(other._c))
        return bool(np.allclose(self.padded(n), other.padded(n), rtol=0.0, atol=atol))

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self._c), len(other._c))
        return Poly(self.padded(n) + other.padded(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-self._c)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        return poly_mul(self, _as_poly(other))

    __rmul__ = __mul__

    def __call__(self, z):
        return poly_eval(self, z)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash(self._c.tobytes())

    def __repr__(self):
        return f"Poly({self._c.tolist()})"

    def tolist(self) -> list[float]:
        return self._c.tolist()


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if np.isscalar(x):
        return Poly([x])
    return Poly(x)


def monomial(k: int, coeff: float = 1.0) -> Poly:
    """``coeff * t^k``."""
    c = np.zeros(k + 1)
    c[k] = coeff
    return Poly(c)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    return Poly(np.convolve(a.coeffs, b.coeffs))


def poly_divrem(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Long division: ``num = den * quotient + remainder``, deg remainder < deg den."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    r = num.coeffs.astype(float).copy()
    d = den.coeffs
    nd = len(d)
    if len(r) < nd:
        return Poly(), Poly(r)
    q = np.zeros(len(r) - nd + 1)
    lead = d[-1]
    for k in range(len(q) - 1, -1, -1):
        coef = r[k + nd - 1] / lead
        q[k] = coef
        r[k : k + nd] -= coef * d
        r[k + nd - 1] = 0.0
    return Poly(q), Poly(r[: nd - 1])


def poly_eval(p: Poly, z):
    """Horner evaluation at a real or complex point."""
    acc = 0.0 * z
    for c in p.coeffs[::-1]:
        acc = acc * z + c
    return acc


def ones_poly(M: int) -> Poly:
    """``C_M(t) = 1 + t + ... + t^M``; ``C_{-1}`` is the zero polynomial."""
    if M < -1:
        raise ValueError("ones_poly needs M >= -1")
    return Poly(np.ones(M + 1))


@dataclass(frozen=True)
class FactorSet:
    """Real irreducible factorization of ``ones_poly(modulus)``.

    ``factors`` lists ``(t + 1)`` first when the modulus is odd, then the
    quadratics in increasing angle.
    """

    modulus: int
    linear_factor_present: bool
    quadratic_angles: tuple[float, ...]
    factors: tuple[Poly, ...]

    def __len__(self):
        return len(self.factors)


def factor_ones_poly(M: int) -> FactorSet:
    if M < 1:
        raise ValueError("factor_ones_poly needs M >= 1")
    factors = []
    linear = M % 2 == 1
    if linear:
        factors.append(Poly([1.0, 1.0]))
    angles = tuple(2.0 * np.pi * k / (M + 1) for k in range(1, M // 2 + 1))
    for theta in angles:
        b = -2.0 * np.cos(theta)
        if abs(b - round(b)) <= 1e-12:
            b = float(round(b))
        factors.append(Poly([1.0, b, 1.0]))
    # multiplying the factors back is badly conditioned for large M, so
    # check instead that each root is a root of C_M and the degrees add up
    c = ones_poly(M)
    roots = [np.exp(1j * th) for th in angles] + ([-1.0] if linear else [])
    if sum(f.degree for f in factors) != M or any(abs(c(z)) > 1e-9 * (M + 1) for z in roots):
        raise ArithmeticError(f"factorization of C_{M} failed to reproduce it")
    return FactorSet(M, linear, angles, tuple(factors))


@dataclass(frozen=True)
class SplitMask:
    """Selection of factors of a :class:`FactorSet` that form ``p``.

    The string form has one character per factor, in factor order:
    ``"10"`` puts the first factor in ``p`` and the second in ``q``.
    """

    bits: tuple[bool, ...]

    @classmethod
    def empty(cls, n: int) -> "SplitMask":
        return cls((False,) * n)

    @classmethod
    def from_string(cls, s: str) -> "SplitMask":
        if any(ch not in "01" for ch in s):
            raise ValueError(f"mask must be a string of 0/1, got {s!r}")
        return cls(tuple(ch == "1" for ch in s))

    @classmethod
    def from_indices(cls, n: int, selected) -> "SplitMask":
        sel = set(selected)
        if any(i < 0 or i >= n for i in sel):
            raise ValueError("factor index out of range")
        return cls(tuple(i in sel for i in range(n)))

    def __str__(self):
        return "".join("1" if b else "0" for b in self.bits)

    def __len__(self):
        return len(self.bits)

    def is_full(self) -> bool:
        return len(self.bits) > 0 and all(self.bits)

    def complement(self) -> "SplitMask":
        return SplitMask(tuple(not b for b in self.bits))


def _check_mask(fs: FactorSet, mask: SplitMask):
    if len(mask) != len(fs):
        raise ValueError(
            f"mask has {len(mask)} bits but C_{fs.modulus} has {len(fs)} factors"
        )
    if mask.is_full():
        raise ValueError("q must have degree >= 1")


def split_from_mask(fs: FactorSet, mask: SplitMask) -> tuple[Poly, Poly]:
    """Return ``(p, q)`` with ``p * q = C_M`` and ``p(0) = q(0) = 1``."""
    _check_mask(fs, mask)
    p = Poly([1.0])
    q = Poly([1.0])
    for bit, f in zip(mask.bits, fs.factors):
        if bit:
            p = p * f
        else:
            q = q * f
    return p.snapped(), q.snapped()


def all_masks(fs: FactorSet) -> list[SplitMask]:
    """Every valid mask (all subsets except the full one), in binary order."""
    n = len(fs)
    out = []
    for bits in itertools.product((False, True), repeat=n):
        m = SplitMask(bits[::-1])
        if not m.is_full():
            out.append(m)
    return out


def count_real_splits(W: int) -> int:
    """Number of splits of ``C_{W-1}`` with deg q >= 1: ``2^(W // 2) - 1``."""
    if W < 2:
        raise ValueError("count_real_splits needs W >= 2")
    return 2 ** (W // 2) - 1


def is_nonneg_split(fs: FactorSet, mask: SplitMask, tol: float = TOL) -> bool:
    p, q = split_from_mask(fs, mask)
    return bool(np.all(p.coeffs >= -tol) and np.all(q.coeffs >= -tol))


def _subset_products(fs: FactorSet) -> list[np.ndarray]:
    """Products of every subset of factors; index bit ``i`` selects factor ``i``."""
    prods = [np.array([1.0])]
    for f in fs.factors:
        prods += [np.convolve(x, f.coeffs) for x in prods]
    return prods


def enumerate_nonneg_splits(M: int, tol: float = TOL, ordered: bool = False) -> list[SplitMask]:
    """Splits ``C_M = p q`` where both factors have non-negative coefficients.

    By default one mask is returned per unordered pair ``{p, q}``: the
    representative keeps the first factor in ``q``, so the constant split
    ``p = 1`` is always present. The list then has ``H(M + 1)`` entries, the
    number of ordered factorizations of ``M + 1``. With ``ordered=True``
    both orientations are returned (``2 H(M + 1) - 1`` masks, the full mask
    being invalid).
    """
    if M < 1:
        raise ValueError("enumerate_nonneg_splits needs M >= 1")
    fs = factor_ones_poly(M)
    n = len(fs)
    full = (1 << n) - 1
    nonneg = [bool(np.all(x >= -tol)) for x in _subset_products(fs)]
    out = []
    for idx in range(full):
        if not ordered and idx & 1:
            continue
        if nonneg[idx] and nonneg[full ^ idx]:
            out.append(SplitMask(tuple(bool(idx >> i & 1) for i in range(n))))
    return out


@functools.lru_cache(maxsize=None)
def ordered_factorizations(n: int) -> int:
    """Count ordered products ``n = n_1 n_2 ... n_k`` with all ``n_i >= 2``."""
    if n < 2:
        raise ValueError("ordered_factorizations needs n >= 2")
    return 1 + sum(ordered_factorizations(n // d) for d in range(2, n) if n % d == 0)
