"""Squared wedge norms as Gram determinants.

The squared norm of v1 ^ ... ^ vk is the squared k-volume of the complex
parallelepiped the vectors span. It vanishes exactly when they are
linearly dependent.
"""

import numpy as np

from wedgeent.exterior import gram_matrix, order_sum, pairwise_wedge_sum, wedge_norm_sq

basis = np.eye(3)
print("orthonormal basis of C^3:      ", wedge_norm_sq(basis))

v = np.array([1 + 2j, -0.5j, 3.0])
print("v ^ 2v:                        ", wedge_norm_sq([v, 2 * v]))

# shrinking every vector by 1/sqrt(3) shrinks the volume by (1/3)^3
scaled = basis / np.sqrt(3)
print("scaled basis, volume:          ", wedge_norm_sq(scaled), "(1/27 =", 1 / 27, ")")
print("scaled basis, all pair areas:  ", pairwise_wedge_sum(scaled))

# for k < d the Gram determinant is the only route
rng = np.random.default_rng(1)
fam = rng.standard_normal((2, 4)) + 1j * rng.standard_normal((2, 4))
print("two vectors in C^4:            ", wedge_norm_sq(fam))
print("det of their Gram matrix:      ", np.linalg.det(gram_matrix(fam)).real)

# order-k sums over all k-subsets of a larger family
fam5 = rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))
for k in (2, 3, 4):
    print(f"order-{k} sum over five vectors in C^3: {order_sum(fam5, k):.6f}")
