"""Exact multi-parametric representations of the Brauer algebra B_k(-2r).

Operators on tensor powers of a 2r-dimensional space are sparse matrices
over Fractions; see :mod:`qbrauer.sparse` for the index conventions.
"""

from .brauer import (
    BrauerElement,
    BrauerRep,
    PairingUndefinedError,
    ParameterMismatchError,
    SymmetrizerUndefinedError,
    SymplecticForm,
    augmentation,
    brauer_generators,
    c_idempotent,
    pairing_type_c,
    q_op,
    q_op_general,
    rho,
    symmetrizer_product,
    symmetrizer_sum,
    trace_h_eps,
    verify_brauer_relations,
)
from .exact import gen_binom
from .linalg import colspace_contained, rank
from .manin import (
    QQ,
    IdempotentPair,
    RingMatrix,
    TruncatedQuotientRing,
    example_matrices,
    manin_check,
    minor_a,
    minor_s,
    universal_manin_ring,
)
from .params import (
    ConstraintError,
    ParameterFamily,
    TypeAParams,
    build_family,
    build_type_a,
    invert,
    mu,
    non_deformed,
    sample,
)
from .quadratic import (
    component_dim,
    dim_formula,
    grassmann_normal_form,
    relations_x_c,
    relations_xi_a,
    relations_xi_c,
)
from .sparse import SparseOp, embed_two_site, swap_sites, trace, transpose
from .symmetric import Permutation, a_entry_closed_form, p_op, pairing_type_a, rho_perm

__version__ = "0.1.0"
