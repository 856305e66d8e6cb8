from ardeconv.armodels import build_w_ar1
from ardeconv.banded import conv_banded, diag_gf
from ardeconv.deconv import NoDeconvolution, ar1_deconv, ar1_exists
from ardeconv.polynomials import all_masks, enumerate_nonneg_splits, factor_ones_poly, split_from_mask

# For AR(1) the matrix splits as tridiagonal * diagonal exactly when
# |phi1| = 1.  Anything else leaves a nonzero remainder 1 - phi1^2.

print(ar1_exists(1.0))
print(ar1_exists(0.5))

try:
    ar1_deconv(0.5, 6)
except NoDeconvolution as exc:
    print("no split:", exc.decision.witness)

# With phi1 = 1 and W = 6 every way of splitting 1 + t + ... + t^5 into two
# real factors p q gives one pair.

W = 6
fs = factor_ones_poly(W - 1)
for f in fs.factors:
    print("factor", f.coeffs.round(3))

for mask in all_masks(fs):
    pair = ar1_deconv(1.0, W, mask)
    p, q = split_from_mask(fs, mask)
    print(mask, "p =", p.coeffs.round(3), "q =", q.coeffs.round(3), "residual", pair.residual)

# Only some splits have non-negative coefficients; those give A and B that
# are both non-negative definite.

for mask in enumerate_nonneg_splits(W - 1, ordered=True):
    pair = ar1_deconv(1.0, W, mask, nonneg=True)
    print(mask, diag_gf(pair.A, 0).coeffs, diag_gf(pair.B, 0).coeffs)

print(conv_banded(pair.A, pair.B).allclose(build_w_ar1(1.0, W)))
