import numpy as np

from ardeconv.banded import SymBanded, conv_banded, conv_dense, gf_matrix_eval, to_dense

# A symmetric banded matrix keeps only its main and upper diagonals.

A = SymBanded(4, ([2.0, 1.0, 1.0, 2.0], [-1.0, 0.5, -1.0]))
B = SymBanded(3, ([1.0, 3.0, 1.0], [0.25, 0.25], [1.0]))

print(to_dense(A))
print(to_dense(B))

# Matrix convolution: c_ij = sum_kl a_kl b_(i-k)(j-l).  The result has size
# 4 + 3 - 1 and half-bandwidth 1 + 2.

C = conv_banded(A, B)
print(C.dim, C.half_bw)

# the diagonal-wise routine and the dense double sum agree

print(np.max(np.abs(to_dense(C) - conv_dense(to_dense(A), to_dense(B)))))

# Convolution multiplies two-variable generating functions
# G(t, s) = sum_ij m_ij t^i s^j.

t, s = 0.3 + 0.4j, -0.7 + 0.1j
print(gf_matrix_eval(C, t, s))
print(gf_matrix_eval(A, t, s) * gf_matrix_eval(B, t, s))
