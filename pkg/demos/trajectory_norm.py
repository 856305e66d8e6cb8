import numpy as np

from ardeconv.armodels import build_w_ar1
from ardeconv.banded import conv_dense, to_dense
from ardeconv.deconv import ar1_deconv
from ardeconv.hslra import mat_norm_sq, theorem1_check, trajectory_matrix, vec_norm_sq

# The trajectory (Hankel) matrix of a series, window L

z = np.array([0.5, -1.25, 2.0, 0.75, -0.5, 1.0, 0.25])
X = trajectory_matrix(z, 3)
print(X)

# Weighting X on both sides by Lm and Rm gives the same number as weighting
# z by their convolution.

rng = np.random.default_rng(1)
Lm = rng.normal(size=(3, 3))
Lm = Lm + Lm.T
Rm = rng.normal(size=(5, 5))
Rm = Rm + Rm.T
print(mat_norm_sq(X, Lm, Rm), vec_norm_sq(z, conv_dense(Lm, Rm)))

# So an AR(1) weight W = A * B can be used as a pair of matrix weights.

pair = ar1_deconv(1.0, 4, "01")
z5 = z[:5]
rep = theorem1_check(z5, pair.A, pair.B)
print(rep.lhs, rep.rhs, z5 @ to_dense(build_w_ar1(1.0, 4)) @ z5)

# Change one entry of W and the two norms no longer match.

Wp = to_dense(build_w_ar1(1.0, 4)).copy()
Wp[0, 0] += 0.1
print(theorem1_check(z5, pair.A, pair.B, Wp).rel_diff)
