import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qbrauer.brauer import c_idempotent, q_op
from qbrauer.linalg import bareiss_rank, colspace_contained, rank, sparse_rank
from qbrauer.params import build_family, invert, sample
from qbrauer.sparse import (
    InvalidDegreeError,
    InvalidSiteError,
    ShapeError,
    SparseOp,
    embed_two_site,
    kron_sites,
    swap_sites,
    symplectic_basis,
    trace,
    transpose,
)
from qbrauer.symmetric import p_op


def random_op(r, k, seed, density=0.3):
    rng = random.Random(seed)
    basis = symplectic_basis(r)
    entries = {}
    for row in itertools.product(basis, repeat=k):
        for col in itertools.product(basis, repeat=k):
            if rng.random() < density:
                entries[row, col] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return SparseOp.from_entries(basis, k, entries)


def test_symplectic_basis_excludes_zero():
    assert symplectic_basis(2) == (-2, -1, 1, 2)


def test_from_entries_rejects_bad_index():
    with pytest.raises(ShapeError):
        SparseOp.from_entries(symplectic_basis(1), 1, {((0,), (1,)): 1})


def test_zero_entries_not_stored():
    T = SparseOp.from_entries(symplectic_basis(1), 1, {((1,), (1,)): 0, ((1,), (-1,)): 2})
    assert T.nnz == 1


def test_embed_identity():
    I2 = SparseOp.identity(symplectic_basis(2), 2)
    assert embed_two_site(I2, 1, 3, 3) == SparseOp.identity(symplectic_basis(2), 3)


def test_embed_into_own_degree():
    T = SparseOp.from_entries(symplectic_basis(1), 2, {((1, -1), (-1, 1)): 3})
    assert embed_two_site(T, 1, 2, 2) == T


def test_embed_q_on_outer_sites():
    # brute-force expansion of Q^(13) on V^{⊗3}, r = 1
    q = build_family(1, [Fraction(3, 2)])
    Q13 = embed_two_site(q_op(q), 1, 3, 3)
    eps = lambda i: 1 if i > 0 else -1  # noqa: E731
    expected = {}
    for i in (-1, 1):
        for j in (-1, 1):
            for x in (-1, 1):
                expected[(i, x, -i), (j, x, -j)] = eps(i) * eps(j) * q.q[i] / q.q[j]
    assert Q13 == SparseOp.from_entries(symplectic_basis(1), 3, expected)


def test_embed_errors():
    P = p_op(sample(1, 1))
    with pytest.raises(InvalidSiteError):
        embed_two_site(P, 2, 2, 3)
    with pytest.raises(InvalidSiteError):
        embed_two_site(P, 1, 4, 3)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([(1, 2), (2, 3), (3, 1), (1, 3)]))
def test_embed_respects_composition(seed, ab):
    S, T = random_op(1, 2, seed), random_op(1, 2, seed + 1)
    a, b = ab
    assert embed_two_site(S @ T, a, b, 3) == embed_two_site(S, a, b, 3) @ embed_two_site(T, a, b, 3)


def test_rank_basics():
    basis = symplectic_basis(2)
    assert rank(SparseOp.zero(basis, 2)) == 0
    assert rank(SparseOp.identity(basis, 2)) == 16
    assert rank(c_idempotent(sample(2, 1))) == 5


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_rank_transpose_invariant(seed):
    T = random_op(1, 2, seed, density=0.2)
    assert rank(T) == rank(transpose(T))


def test_dense_and_sparse_rank_agree():
    for seed in range(5):
        T = random_op(2, 2, seed, density=0.05)
        assert bareiss_rank(T.to_dense()) == sparse_rank(T)


def test_bareiss_small():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[Fraction(1, 2), 1], [0, 3]]) == 2


def test_trace_values():
    q = sample(3, 2)
    assert trace(SparseOp.identity(symplectic_basis(2), 1)) == 4
    assert trace(q_op(q)) == 6


def test_transpose_and_swap():
    q = sample(2, 4)
    basis = q.basis
    assert transpose(SparseOp.identity(basis, 2)) == SparseOp.identity(basis, 2)
    assert transpose(p_op(q)) == p_op(invert(q))
    assert swap_sites(q_op(q)) == q_op(invert(q))
    T = random_op(1, 2, 7)
    assert swap_sites(swap_sites(T)) == T
    assert transpose(transpose(T)) == T
    with pytest.raises(InvalidDegreeError):
        swap_sites(SparseOp.identity(basis, 3))


def test_colspace_contained():
    q = sample(2, 3)
    C, P, Q = c_idempotent(q), p_op(q), q_op(q)
    basis = q.basis
    assert colspace_contained(SparseOp.zero(basis, 2), [P])
    one_minus = (-C).add_identity(1)
    assert colspace_contained(one_minus, [P.add_identity(1), Q])
    assert colspace_contained(P.add_identity(1), [one_minus])
    assert colspace_contained(Q, [one_minus])
    assert not colspace_contained(SparseOp.identity(basis, 2), [C])
    with pytest.raises(ShapeError):
        colspace_contained(C, [SparseOp.identity(basis, 3)])


def test_json_roundtrip_bit_exact():
    T = random_op(1, 2, 11)
    data = T.to_json()
    assert data["r"] == 1 and data["k"] == 2
    assert SparseOp.from_json(data) == T
    assert SparseOp.from_json(data).to_json() == data
    rows = [(e[0], e[1]) for e in data["entries"]]
    assert rows == sorted(rows)


def test_kron_sites():
    basis = symplectic_basis(1)
    X = SparseOp.from_entries(basis, 1, {((1,), (-1,)): 2, ((-1,), (-1,)): 1})
    Y = SparseOp.from_entries(basis, 1, {((-1,), (1,)): 3})
    XY = kron_sites([X, Y])
    assert XY[(1, -1), (-1, 1)] == 6
    assert XY.nnz == 2


def test_scalar_and_power():
    P = p_op(sample(2, 5))
    assert P ** 2 == SparseOp.identity(P.basis, 2)
    assert (P * 2) / 2 == P
