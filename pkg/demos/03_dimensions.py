"""
Three ways to count dim Xi_{C_q}(K)_k
=====================================

The rank of the pairing operator, the dimension of the degree-k part of the
quotient algebra (plain linear algebra on words), and the closed formula.
"""

from qbrauer import component_dim, dim_formula, pairing_type_c, rank, relations_xi_c, sample

for r in (1, 2, 3):
    q = sample(r, 5)
    rels = relations_xi_c(q)
    print(f"r = {r}: {len(rels.relations)} relations on {rels.n} generators")
    for k in range(1, r + 2):
        row = (rank(pairing_type_c(q, k)), component_dim(rels, k), dim_formula(r, k))
        print(f"  k = {k}:  rank {row[0]:3d}   quotient {row[1]:3d}   formula {row[2]:3d}")

# %%
# Dropping the contraction relation leaves the q-Grassmann algebra,
# whose components have binomial dimensions.
q = sample(2, 5)
grass = relations_xi_c(q, contraction=False)
print("q-Grassmann, r = 2:", [component_dim(grass, k) for k in range(1, 5)])
