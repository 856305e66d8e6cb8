"""Command-line front end.

Exit codes: 0 success, 1 the query is valid but the answer is "no" (a JSON
witness is printed on stdout), 2 bad flags or parameters, 3 I/O failure.
All numbers are printed with ``%.17g``.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import fileio
from .armodels import ArParams, autocov_ar, build_w, is_stationary
from .banded import diag_gf
from .deconv import (
    NoDeconvolution,
    ar1_deconv,
    ar2_b1_deconv,
    ar2_penta_deconv,
    ar2_tri_deconv,
    arp_diagB_decision,
    arp_remainder_closed,
    nonneg_deconv,
)
from .hslra import theorem1_check
from .polynomials import (
    all_masks,
    enumerate_nonneg_splits,
    factor_ones_poly,
    ones_poly,
    poly_divrem,
    split_from_mask,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
NORM_TOL = 1e-10

MASK_HELP = (
    "split of the ones-polynomial C_M as a 0/1 string, one character per real "
    "factor of C_M: (t+1) first when M is odd, then t^2 - 2cos(2 pi k/(M+1)) t + 1 "
    "for k = 1, 2, ...; '1' puts the factor in A, '0' in B. "
    "`ardeconv splits --m M` lists the factors and valid masks. Default: all zeros"
)


class UsageError(Exception):
    pass


def _parse_phi(text: str) -> tuple[float, ...]:
    try:
        phi = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--phi must be a comma-separated list of numbers, got {text!r}")
    if not all(np.isfinite(phi)):
        raise UsageError("--phi values must be finite")
    return phi


def _ar_params(phi: tuple[float, ...]) -> ArParams:
    try:
        return ArParams(phi)
    except ValueError as exc:
        raise UsageError(str(exc))


def _check_arity(model: str, phi: tuple[float, ...]):
    need = {"ar1": 1, "ar2": 2}.get(model)
    if need is not None and len(phi) != need:
        raise UsageError(f"model {model} takes {need} parameter(s), got {len(phi)}")


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _json(obj) -> str:
    return fileio.dumps(obj) + "\n"


# -- subcommands ----------------------------------------------------------


def cmd_build_w(args) -> int:
    phi = _parse_phi(args.phi)
    _check_arity(args.model, phi)
    try:
        w = build_w(_ar_params(phi), args.size)
    except ValueError as exc:
        raise UsageError(str(exc))
    text = _json(w.to_dict())
    dense = fileio.matrix_to_csv(w) if args.dense else None
    _emit(text, args.out)
    if dense is not None:
        _emit(dense, args.dense)
    return EXIT_OK


def cmd_autocov(args) -> int:
    phi = _parse_phi(args.phi)
    ar = _ar_params(phi)
    if args.size < 0:
        raise UsageError("--size must be >= 0")
    if not is_stationary(ar):
        print(_json({"stationary": False, "phi": list(phi)}), end="")
        return EXIT_NO
    sigma = autocov_ar(ar, args.size)
    text = _json({"stationary": True, "phi": list(phi), "gamma": sigma[0].tolist()})
    _emit(text, args.out)
    if args.dense:
        _emit(fileio.matrix_to_csv(sigma), args.dense)
    return EXIT_OK


def _run_deconv(args, phi):
    if args.model == "ar1":
        if args.shape is not None:
            raise UsageError("--shape applies to --model ar2 only")
        if args.nonneg:
            return nonneg_deconv("AR1", phi, args.size, args.mask)
        return ar1_deconv(phi[0], args.size, args.mask)
    if args.shape is None:
        raise UsageError("--model ar2 needs --shape {tri,penta,b1}")
    if args.shape == "b1":
        if args.nonneg or args.mask is not None:
            raise UsageError("--shape b1 takes neither --mask nor --nonneg")
        return ar2_b1_deconv(phi[0], phi[1], args.size)
    if args.shape == "tri":
        if args.nonneg:
            return nonneg_deconv("AR2_TRI", phi, args.size, args.mask, args.branch)
        return ar2_tri_deconv(phi[0], phi[1], args.size, args.mask, args.branch)
    if args.nonneg:
        return nonneg_deconv("AR2_PENTA", phi, args.size, args.mask)
    return ar2_penta_deconv(phi[0], phi[1], args.size, args.mask)


def cmd_deconv(args) -> int:
    phi = _parse_phi(args.phi)
    _check_arity(args.model, phi)
    ar = _ar_params(phi)
    if args.mask is not None and any(ch not in "01" for ch in args.mask):
        raise UsageError(f"--mask must be a 0/1 string, got {args.mask!r}")
    if args.model == "arp":
        if args.mask is not None or args.nonneg or args.shape is not None:
            raise UsageError("--model arp takes only --phi and --size")
        if args.size is not None and args.size < 2 * ar.order:
            raise UsageError("matrix too small for order p")
        decision = arp_diagB_decision(ar)
        _emit(_json(decision.to_dict()), args.out)
        return EXIT_NO if decision.exists is False else EXIT_OK
    if args.size is None:
        raise UsageError(f"--model {args.model} needs --size")
    try:
        pair = _run_deconv(args, phi)
    except NoDeconvolution as exc:
        sys.stdout.write(_json(exc.decision.to_dict()))
        return EXIT_NO
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(_json(pair.to_dict()), args.out)
    return EXIT_OK


def cmd_splits(args) -> int:
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    if args.ordered and not args.nonneg:
        raise UsageError("--ordered applies with --nonneg only")
    fs = factor_ones_poly(args.m)
    if args.nonneg:
        masks = enumerate_nonneg_splits(args.m, ordered=args.ordered)
    else:
        masks = all_masks(fs)
    if args.count_only:
        print(len(masks))
        return EXIT_OK
    splits = []
    for mask in masks:
        p, q = split_from_mask(fs, mask)
        splits.append({"mask": str(mask), "p": p.tolist(), "q": q.tolist()})
    print(_json({
        "M": args.m,
        "factors": [f.tolist() for f in fs.factors],
        "count": len(splits),
        "splits": splits,
    }), end="")
    return EXIT_OK


def cmd_remainders(args) -> int:
    ar = _ar_params(_parse_phi(args.phi))
    p = ar.order
    out = {
        "order": p,
        "remainders": [arp_remainder_closed(ar, k).tolist() for k in range(p + 1)],
    }
    if args.size is not None:
        if args.size < 2 * p:
            raise UsageError("matrix too small for order p")
        w = build_w(ar, args.size)
        out["division"] = [
            poly_divrem(diag_gf(w, k), ones_poly(args.size - p))[1].tolist()
            for k in range(p + 1)
        ]
    out["decision"] = arp_diagB_decision(ar).to_dict()
    print(_json(out), end="")
    return EXIT_OK


def _load(loader, path):
    try:
        return loader(path)
    except OSError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot parse {path}: {exc}")


def cmd_check_norm(args) -> int:
    z = _load(fileio.load_series, args.series)
    Lm = _load(fileio.load_matrix, args.L)
    Rm = _load(fileio.load_matrix, args.R)
    W = _load(fileio.load_matrix, args.W) if args.W else None
    for name, m in (("L", Lm), ("R", Rm)) + ((("W", W),) if W is not None else ()):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise UsageError(f"{name} must be a square matrix, got shape {m.shape}")
    n = Lm.shape[0] + Rm.shape[0] - 1
    if len(z) != n:
        raise UsageError(f"series has length {len(z)}, weights of sizes "
                         f"{Lm.shape[0]} and {Rm.shape[0]} need {n}")
    if W is not None and W.shape[0] != n:
        raise UsageError(f"W has size {W.shape[0]}, series has length {n}")
    report = theorem1_check(z, Lm, Rm, W)
    print(_json(report.to_dict()), end="")
    return EXIT_OK if report.rel_diff <= NORM_TOL else EXIT_NO


def cmd_verify(args) -> int:
    from . import verify

    checks = verify.ALL_CHECKS
    if args.only:
        names = {c.__name__.removeprefix("check_") for c in checks}
        unknown = set(args.only) - names
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(sorted(unknown))}")
        checks = [c for c in checks if c.__name__.removeprefix("check_") in args.only]
    ok = True
    for check in checks:
        res = check()
        print(res.line(), flush=True)
        ok &= res.passed
    return EXIT_OK if ok else EXIT_NO


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ardeconv",
        description="Build AR inverse autocovariance matrices and split them as A * B.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-w", help="banded inverse autocovariance matrix as JSON")
    p.add_argument("--model", choices=("ar1", "ar2", "arp"), required=True)
    p.add_argument("--phi", required=True, help="comma-separated phi_1,...,phi_p")
    p.add_argument("--size", type=int, required=True, help="W; the matrix has W+1 rows")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.add_argument("--dense", metavar="CSV", help="also write the dense matrix as CSV")
    p.set_defaults(func=cmd_build_w)

    p = sub.add_parser("autocov", help="autocovariances of a stationary AR process")
    p.add_argument("--phi", required=True)
    p.add_argument("--size", type=int, required=True, help="largest lag")
    p.add_argument("--out")
    p.add_argument("--dense", metavar="CSV", help="also write the Toeplitz matrix as CSV")
    p.set_defaults(func=cmd_autocov)

    p = sub.add_parser("deconv", help="decide and construct W = A * B")
    p.add_argument("--model", choices=("ar1", "ar2", "arp"), required=True)
    p.add_argument("--shape", choices=("tri", "penta", "b1"),
                   help="ar2 only: tri = both tridiagonal, penta = five-diagonal A and "
                        "diagonal B, b1 = B of size 2")
    p.add_argument("--phi", required=True)
    p.add_argument("--size", type=int, help="W; required except for arp")
    p.add_argument("--mask", help=MASK_HELP)
    p.add_argument("--branch", type=int, choices=(1, 2), default=1,
                   help="tri shape: which root goes into A")
    p.add_argument("--nonneg", action="store_true",
                   help="require both factors non-negative definite")
    p.add_argument("--out")
    p.set_defaults(func=cmd_deconv)

    p = sub.add_parser("splits", help="factor C_M = 1 + t + ... + t^M and list its splits")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--nonneg", action="store_true",
                   help="only splits with non-negative coefficients, one per unordered pair")
    p.add_argument("--ordered", action="store_true",
                   help="with --nonneg, list both orientations of each pair")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_splits)

    p = sub.add_parser("remainders", help="remainders of the AR(p) diagonals modulo C_{W-p}")
    p.add_argument("--phi", required=True)
    p.add_argument("--size", type=int, help="also compute the remainders by division at this W")
    p.set_defaults(func=cmd_remainders)

    p = sub.add_parser("check-norm", help="compare z'Wz with the weighted trajectory norm")
    p.add_argument("--series", required=True, help="CSV, one value per line")
    p.add_argument("--L", required=True, help="left weight, SymBanded JSON or dense CSV")
    p.add_argument("--R", required=True, help="right weight, SymBanded JSON or dense CSV")
    p.add_argument("--W", help="weight for z; defaults to L * R")
    p.set_defaults(func=cmd_check_norm)

    p = sub.add_parser("verify", help="run the randomized property suite")
    p.add_argument("--only", nargs="+", metavar="CHECK")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ardeconv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"ardeconv: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
