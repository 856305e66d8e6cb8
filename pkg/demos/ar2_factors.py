import numpy as np

from ardeconv.armodels import build_w_ar2
from ardeconv.banded import to_dense
from ardeconv.deconv import (
    ar2_b1_deconv,
    ar2_penta_deconv,
    ar2_penta_exists,
    ar2_tri_deconv,
    ar2_tri_exists,
    nonneg_deconv,
)

# AR(2) admits three kinds of factorization, all at the edge of the
# stationarity triangle.

# two tridiagonal factors: phi2 = -1 with |phi1| >= 2, or (phi1, phi2) = (0, 1)

pair = ar2_tri_deconv(3.0, -1.0, 6, branch=1)
print(pair.shape, pair.residual)
print(to_dense(pair.A).round(3))

# five-diagonal A and diagonal B: phi2 = -1 with any phi1, or (0, 1)

pair = ar2_penta_deconv(0.5, -1.0, 5, "10")
print(pair.shape, pair.residual)
print(to_dense(pair.A))
print(to_dense(pair.B))

# B of size 2: possible for odd W when (1 + t) divides the first off-diagonal

pair = ar2_b1_deconv(0.0, 0.5, 5)
print(to_dense(pair.A))

# Non-negative definite factors

pair = nonneg_deconv("AR2_TRI", (-2.0, -1.0), 5)
print([np.linalg.eigvalsh(to_dense(m)).min().round(12) for m in (pair.A, pair.B)])

# A stationary interior point has none of these.

print(ar2_tri_exists(0.5, 0.3))
print(ar2_penta_exists(0.5, 0.3))
print(to_dense(build_w_ar2(0.5, 0.3, 5)).round(2))
