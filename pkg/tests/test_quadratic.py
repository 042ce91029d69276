import itertools
from fractions import Fraction
from math import comb

import pytest

from qbrauer.brauer import BrauerRep, c_idempotent, pairing_type_c
from qbrauer.linalg import rank
from qbrauer.manin import TruncatedQuotientRing
from qbrauer.params import invert, non_deformed, sample
from qbrauer.quadratic import (
    DIM_COLUMNS,
    InternalConsistencyError,
    RelationSet,
    ResourceLimitError,
    c_relation_rank,
    component_dim,
    dim_formula,
    dimension_csv,
    dimension_rows,
    grassmann_normal_form,
    relations_x_c,
    relations_xi_a,
    relations_xi_c,
)


def test_free_algebra():
    assert component_dim(RelationSet.build((1, 2, 3), []), 2) == 9


def test_word_cap(monkeypatch):
    rels = relations_xi_c(sample(2, 1))
    with pytest.raises(ResourceLimitError):
        component_dim(rels, 3, cap=10)
    monkeypatch.setenv("QBRAUER_WORD_CAP", "20")
    with pytest.raises(ResourceLimitError):
        component_dim(rels, 3)


def test_relation_set_validation():
    with pytest.raises(ValueError):
        RelationSet((1, 2), (((( 1, 5), Fraction(1)),),))
    assert RelationSet.build((1,), [{(1, 1): 0}]).relations == ()


def test_xi_c_span():
    q = sample(2, 3)
    assert relations_xi_c(q).span_rank() == 11
    assert relations_xi_c(q, dual=True) == relations_xi_c(invert(q))


def test_xi_c_classical_r1():
    rels = relations_xi_c(non_deformed(1))
    assert component_dim(rels, 2) == 0
    assert component_dim(relations_xi_c(non_deformed(1), contraction=False), 2) == 1


@pytest.mark.parametrize("r,expected", [(2, [4, 5, 0]), (3, [6, 14, 14, 0])])
def test_component_dims(r, expected):
    q = sample(r, 2)
    rels = relations_xi_c(q)
    assert [component_dim(rels, d) for d in range(1, r + 2)] == expected


@pytest.mark.parametrize("r", [1, 2, 3])
def test_grassmann_dims(r):
    q = sample(r, 4)
    rels = relations_xi_c(q, contraction=False)
    for k in range(1, min(4, 2 * r) + 1):
        assert component_dim(rels, k) == comb(2 * r, k)


def test_x_c():
    q = sample(2, 1)
    assert relations_x_c(q).span_rank() == 5 == c_relation_rank(q)
    assert relations_x_c(sample(1, 1)).relations == ()


def test_x_c_matches_rows_of_c():
    # each X relation lies in the row space of C_q acting on degree-2 words
    from qbrauer.linalg import EchelonBasis

    q = sample(2, 5)
    C = c_idempotent(q)
    n = len(q.basis)
    rows = {}
    for ck, col in C.columns().items():
        for rk, v in col.items():
            rows.setdefault(rk, {})[ck] = v
    basis = EchelonBasis().extend(rows.values())
    for vec in relations_x_c(q).vectors():
        assert basis.contains(vec)
    assert basis.rank == 5 and n == 4


def test_dim_formula():
    for r in (1, 2, 3, 4):
        assert dim_formula(r, 1) == 2 * r
        assert dim_formula(r, r + 1) == 0
        assert dim_formula(r, r + 3) == 0
    assert (dim_formula(2, 2), dim_formula(2, 3)) == (5, 0)
    assert [dim_formula(3, k) for k in (2, 3, 4)] == [14, 14, 0]
    with pytest.raises(ValueError):
        dim_formula(0, 1)
    assert issubclass(InternalConsistencyError, AssertionError)


def test_normal_form_examples():
    q = sample(2, 1)
    assert grassmann_normal_form((-1, 2), q).coefficient == 1
    nf = grassmann_normal_form((2, -1), q)
    assert nf.word == (-1, 2) and nf.coefficient == -q.pair(2, -1)
    assert grassmann_normal_form((1, 2, 1), q).is_zero
    up = grassmann_normal_form((2, -1), q, "upper")
    assert up.coefficient == -q.pair(-1, 2)
    with pytest.raises(ValueError):
        grassmann_normal_form((1,), q, "middle")


def test_normal_form_in_quotient():
    # word - coefficient * sorted word lies in the q-Grassmann ideal
    q = sample(2, 6)
    rels = relations_xi_a(q)
    digit = {x: d for d, x in enumerate(q.basis)}
    ring = TruncatedQuotientRing(4, 3, rels.vectors())
    for word in itertools.permutations(q.basis, 3):
        nf = grassmann_normal_form(word, q)
        lhs = ring.one
        for x in word:
            lhs = lhs * ring.gen(digit[x])
        rhs = ring.one
        for x in nf.word:
            rhs = rhs * ring.gen(digit[x])
        assert lhs == rhs * nf.coefficient


@pytest.mark.parametrize("k", [2, 3, 4])
def test_normal_form_composition(k):
    q = sample(2, 2)
    for word in itertools.permutations(q.basis, k):
        for cut in range(1, k):
            w1, w2 = word[:cut], word[cut:]
            n1, n2 = grassmann_normal_form(w1, q), grassmann_normal_form(w2, q)
            cross = grassmann_normal_form(n1.word + n2.word, q)
            assert grassmann_normal_form(word, q).coefficient == n1.coefficient * n2.coefficient * cross.coefficient


def test_lemma_conditions():
    q = sample(3, 3)
    for k in (2, 3):
        rep = BrauerRep(q, k)
        C = pairing_type_c(q, k)
        for a in range(1, k):
            assert rep.gen("s", a) @ C == C == C @ rep.gen("s", a)
            assert (rep.gen("e", a) @ C).is_zero()


def test_dimension_rows_and_csv():
    rows = dimension_rows(2, 3, [2, 1])
    assert [row["seed"] for row in rows] == [1, 1, 1, 2, 2, 2]
    assert [row["formula"] for row in rows[:3]] == [4, 5, 0]
    assert all(row["agree"] for row in rows)
    text = dimension_csv(rows)
    assert text.splitlines()[0] == ",".join(DIM_COLUMNS)
    assert text.splitlines()[2] == "1,2,2,5,5,5,true"


def test_rank_of_pairing_matches_quotient():
    q = sample(3, 9)
    rels = relations_xi_c(q)
    for k in (2, 3):
        assert rank(pairing_type_c(q, k)) == component_dim(rels, k)
