"""Blind deconvolution of banded inverse autocovariance matrices.

The inverse autocovariance matrix ``W`` of an autoregressive process is
banded. This package builds those matrices, decides when ``W`` can be
written as a matrix convolution ``A * B`` of smaller symmetric banded
matrices, constructs the factors, and checks the weighted-norm identity
that links ``z' W z`` to a weighted norm of the trajectory matrix of ``z``.
"""
from .armodels import ArParams, autocov_ar, build_w, is_stationary
from .banded import SymBanded, conv_banded, conv_dense, from_dense, to_dense
from .deconv import (
    DeconvDecision,
    DeconvPair,
    NoDeconvolution,
    ar1_deconv,
    ar1_exists,
    ar2_b1_deconv,
    ar2_b1_exists,
    ar2_penta_deconv,
    ar2_penta_exists,
    ar2_tri_deconv,
    ar2_tri_exists,
    arp_diagB_decision,
    nonneg_deconv,
)
from .hslra import theorem1_check, trajectory_matrix
from .polynomials import (
    Poly,
    SplitMask,
    enumerate_nonneg_splits,
    factor_ones_poly,
    ones_poly,
    split_from_mask,
)

__version__ = "0.1.0"

__all__ = [
    "ArParams",
    "autocov_ar",
    "build_w",
    "is_stationary",
    "SymBanded",
    "conv_banded",
    "conv_dense",
    "from_dense",
    "to_dense",
    "DeconvDecision",
    "DeconvPair",
    "NoDeconvolution",
    "ar1_deconv",
    "ar1_exists",
    "ar2_b1_deconv",
    "ar2_b1_exists",
    "ar2_penta_deconv",
    "ar2_penta_exists",
    "ar2_tri_deconv",
    "ar2_tri_exists",
    "arp_diagB_decision",
    "nonneg_deconv",
    "theorem1_check",
    "trajectory_matrix",
    "Poly",
    "SplitMask",
    "enumerate_nonneg_splits",
    "factor_ones_poly",
    "ones_poly",
    "split_from_mask",
]
