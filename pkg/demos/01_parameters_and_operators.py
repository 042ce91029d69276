"""
Deformation parameters and the operators P_q, Q_q, C_q
======================================================

A rank-r family is fixed by r values q_1..q_r and r(r-1)/2 values q_ij.
Everything else follows from the two constraint families.
"""

from fractions import Fraction

from qbrauer import build_family, c_idempotent, invert, p_op, q_op, rank
from qbrauer.sparse import trace, transpose

# %%
# Build a rank-2 family by hand. q_{-1,2} comes out as q_2^2 / q_12 = 9/5.
q = build_family(2, [2, 3], {(1, 2): 5})
print("q_{-1,2} =", q.qij[-1, 2])
print("q_{-1,1} =", q.qij[-1, 1], "(= q_1^2)")

# %%
# P_q is an involution, Q_q is 2r times an idempotent, and PQ = QP = -Q.
P, Q = p_op(q), q_op(q)
print("P^2 == 1:", (P @ P).add_identity(-1).is_zero())
print("Q^2 == 4Q:", Q @ Q == Q * 4)
print("PQ == -Q:", P @ Q == -Q)
print("tr Q =", trace(Q))

# %%
# The type-C idempotent. Its rank is 5 at r = 2, for every family.
C = c_idempotent(q)
print("C^2 == C:", C @ C == C, " rank:", rank(C), " trace:", trace(C))

# %%
# Transposing swaps q for the reciprocal family q'.
print("C^T == C_q':", transpose(C) == c_idempotent(invert(q)))

# %%
# A few entries, row index (i, j) and column index (l, m).
for row, col, v in list(C.entries())[:6]:
    print(row, col, v)
print("entries are exact:", all(isinstance(v, Fraction) for _, _, v in C.entries()))
