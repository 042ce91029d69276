"""
The Brauer algebra acting on V^{⊗k}
===================================

sigma_a goes to -P_q on sites (a, a+1) and eps_a to -Q_q, so B_k(-2r) acts.
We check the defining relations and build the symmetrizer two ways.
"""

from qbrauer import BrauerRep, sample, symmetrizer_product, symmetrizer_sum, verify_brauer_relations
from qbrauer.brauer import augmentation, symmetrizer_trace
from qbrauer.linalg import rank
from qbrauer.sparse import trace

q = sample(3, 11)
print("free parameters:", q.to_json())

# %%
# Every defining relation (and the Q/P identities) at k = 3.
for rec in verify_brauer_relations(q, 3):
    print(f"{rec['status']:4s}  {rec['relation']}")

# %%
# s_(k) as a formal element, then its image. The augmentation is 1.
omega = -2 * q.r
s3 = symmetrizer_product(3, omega)
print("terms in s_(3):", len(s3), " augmentation:", augmentation(s3))

rep = BrauerRep(q, 3)
S_prod = rep(s3)
S_sum = rep(symmetrizer_sum(3, omega))
print("product form == sum form:", S_prod == S_sum)

# %%
# The image is an idempotent whose trace is given in closed form.
print("idempotent:", S_prod @ S_prod == S_prod)
print("rank:", rank(S_prod), " trace:", trace(S_prod), " closed form:", -symmetrizer_trace(3, omega))

# %%
# At k = r + 2 the product formula divides by zero.
try:
    BrauerRep(q, q.r + 2).symmetrizer_product()
except ZeroDivisionError as exc:
    print("k = r+2:", exc)
