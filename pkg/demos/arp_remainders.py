import numpy as np

from ardeconv.armodels import build_w
from ardeconv.banded import diag_gf
from ardeconv.deconv import arp_diagB_decision, arp_remainder_closed
from ardeconv.polynomials import ones_poly, poly_divrem

# For a diagonal B every diagonal of W must be divisible by the same
# ones-polynomial.  The remainders do not depend on W once W >= 2p.

phi = (0.2, 0.1, 0.3)
p = len(phi)
for W in (6, 9, 15):
    w = build_w(phi, W)
    rems = [poly_divrem(diag_gf(w, k), ones_poly(W - p))[1].coeffs.round(6) for k in range(p + 1)]
    print(W, rems)

print([arp_remainder_closed(phi, k).coeffs.round(6) for k in range(p + 1)])

# The leading coefficient of r_0 is 1 - phi_p^2, so |phi_p| != 1 rules a
# diagonal B out immediately.

print(arp_diagB_decision(phi))

# At |phi_p| = 1 the other remainders still have to vanish.

print(arp_diagB_decision((0.5, 0.0, 1.0)))
print(arp_diagB_decision((0.0, 1.0)))

rng = np.random.default_rng(0)
phi = tuple(rng.uniform(-1, 1, 5))
print(arp_remainder_closed(phi, 0).coeffs[-1], 1 - phi[-1] ** 2)
