"""
Manin matrices and their minors
===============================

A matrix M over a ring is (A, Ã)-Manin when A M^(1) M^(2) (1 - Ã) = 0.
The universal example lives over the free algebra on the entries modulo
exactly those relations, truncated in degree.
"""

from qbrauer import IdempotentPair, build_type_a, manin_check, minor_a, pairing_type_a, universal_manin_ring
from qbrauer.manin import example_matrices, generic_matrix, universal_pair
from qbrauer.params import non_deformed, sample, sample_type_a

# %%
# Classical 2x2 Manin matrices: 16 quadratic words, 3 relations.
A = pairing_type_a(build_type_a(2), 2, "A")
pair = IdempotentPair(A, A)
ring = universal_manin_ring(pair, 3)
print("degree 2:", ring.component_dim(2), " degree 3:", ring.component_dim(3))

M = generic_matrix(ring, pair.V, pair.Vt)
minor = minor_a(M, build_type_a(2), 2)
print("column determinant / 2:", minor[(1, 2), (1, 2)])

# %%
# A symplectic transvection is a type-C Manin matrix at q = 1.
T = example_matrices("symplectic_elementary", {"r": 2, "v": {1: 1, -2: 1}, "c": 2})
print("transvection:", manin_check(universal_pair(non_deformed(2)), T)["status"])

# %%
# The generic (C_q, A_p)-Manin matrix. Its A-minors vanish at k = r + 1.
q, p = sample(2, 1), sample_type_a(2, 1)
U = example_matrices("universal", {"q": q, "ptilde": p, "dmax": 3})
print("generators:", U.ring.g, " relations in degree 2:", U.ring.relation_rank(2))
print("2nd A-minors nonzero:", not minor_a(U, q, 2).is_zero())
print("3rd A-minors vanish:", minor_a(U, q, 3).is_zero())
