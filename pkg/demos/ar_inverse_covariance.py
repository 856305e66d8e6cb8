import numpy as np

from ardeconv.armodels import autocov_ar, build_w, diag_gf_closed, is_stationary
from ardeconv.banded import diag_gf, to_dense

# The inverse autocovariance matrix of a stationary AR(p) process is banded
# with half-bandwidth p.  "Size" W means W + 1 rows.

phi = (0.2, 0.1, 0.3)
print(is_stationary(phi))

W = build_w(phi, 8)
print(W.dim, W.half_bw)
print(to_dense(W).round(3))

# Multiplying by the Toeplitz autocovariance matrix gives the identity
# (unit-variance innovations).

Sigma = autocov_ar(phi, 8)
print(np.max(np.abs(to_dense(W) @ Sigma - np.eye(9))))

# Each diagonal, read as polynomial coefficients, is a combination of
# ones-polynomials 1 + t + ... + t^M.

for k in range(4):
    print(k, diag_gf(W, k).coeffs.round(3), diag_gf_closed(phi, 8, k).allclose(diag_gf(W, k)))

# The builders do not need stationarity: the boundary point (2, -1) gives
# integer entries.

print(to_dense(build_w((2.0, -1.0), 4)))
