import random
from fractions import Fraction

import pytest

from qbrauer.brauer import (
    RELATION_NAMES,
    BrauerElement,
    BrauerRep,
    InvalidFormError,
    PairingUndefinedError,
    ParameterMismatchError,
    SymmetrizerUndefinedError,
    SymplecticForm,
    augmentation,
    brauer_generators,
    c_idempotent,
    pairing_type_c,
    perm_element,
    q_op,
    q_op_general,
    random_symplectic_form,
    rho,
    symmetrizer_product,
    symmetrizer_sum,
    symmetrizer_trace,
    trace_h_eps,
    verify_brauer_relations,
)
from qbrauer.exact import gen_binom
from qbrauer.linalg import rank
from qbrauer.params import ParameterFamily, build_family, invert, non_deformed, sample
from qbrauer.sparse import SparseOp, embed_two_site, trace, transpose
from qbrauer.symmetric import Permutation, p_op, pairing_type_a


def test_q_op_r1_block():
    x = Fraction(3, 5)
    Q = q_op(build_family(1, [x]))
    assert Q[(1, -1), (1, -1)] == 1
    assert Q[(1, -1), (-1, 1)] == -x ** 2
    assert Q[(-1, 1), (1, -1)] == -x ** -2
    assert Q[(-1, 1), (-1, 1)] == 1
    assert Q.nnz == 4


@pytest.mark.parametrize("r", [1, 2, 3])
def test_q_op_identities(r):
    q = sample(r, r + 10)
    P, Q = p_op(q), q_op(q)
    assert Q.nnz == (2 * r) ** 2
    assert trace(Q) == 2 * r
    assert Q @ Q == Q * (2 * r)
    assert P @ Q == -Q == Q @ P


def test_q_op_general_canonical():
    assert q_op_general(SymplecticForm.canonical(2)) == q_op(non_deformed(2))


def test_q_op_general_random_form():
    form = random_symplectic_form(2, 3)
    Q = q_op_general(form)
    assert trace(Q) == 4
    P = p_op(non_deformed(2))
    report = verify_rep(BrauerRep(non_deformed(2), 3, P=P, Q=Q))
    assert report == []


def verify_rep(rep):
    """Failing defining relations of an arbitrary (P, Q) pair, evaluated directly."""
    from qbrauer.brauer import _eval_side, _relations

    failed = []
    for name, instances in _relations(rep.k):
        for lhs, rhs in instances:
            if _eval_side(rep, lhs) != _eval_side(rep, rhs):
                failed.append(name)
                break
    return failed


def test_invalid_forms():
    with pytest.raises(InvalidFormError):
        SymplecticForm(1, {(1, -1): Fraction(1), (-1, 1): Fraction(2)})
    with pytest.raises(InvalidFormError):
        SymplecticForm(1, {})


def test_rho_generators():
    q = sample(2, 2)
    k = 3
    s1 = BrauerElement.gen("s", 1, -4, k)
    assert rho(q, s1, k) == -embed_two_site(p_op(q), 1, 2, k)
    e1 = BrauerElement.gen("e", 1, -4, k)
    assert rho(q, s1 * e1 - e1, k).is_zero()
    e2 = BrauerElement.gen("e", 2, -4, k)
    assert rho(q, e1 * e2 * e1 - e1, k).is_zero()


def test_rho_omega_mismatch():
    q = sample(2, 2)
    with pytest.raises(ParameterMismatchError):
        rho(q, BrauerElement.gen("s", 1, -6, 2), 2)
    with pytest.raises(ParameterMismatchError):
        rho(q, BrauerElement.gen("s", 1, -4, 3), 2)


def test_named_generators():
    om = Fraction(-4)
    assert brauer_generators("tau_ab", (2, 2), 3, om) == BrauerElement.one(om, 3)
    assert brauer_generators("sigma_ab", (1, 2), 3, om) == BrauerElement.gen("s", 1, om, 3)
    assert brauer_generators("eps_ab", (2, 3), 3, om) == BrauerElement.gen("e", 2, om, 3)
    with pytest.raises(ZeroDivisionError):
        brauer_generators("v_a", 1, 2, 0)
    with pytest.raises(ValueError):
        brauer_generators("bogus", 1, 2, om)


def test_v_a_maps_to_c():
    q = sample(2, 3)
    v = brauer_generators("v_a", 2, 3, -4)
    V = rho(q, v, 3)
    assert V == embed_two_site(c_idempotent(q), 2, 3, 3)
    assert rho(q, v * v - v, 3).is_zero()


def test_conjugation_of_eps():
    q = sample(2, 4)
    rng = random.Random(0)
    for k in (3, 4):
        rep = BrauerRep(q, k)
        for _ in range(4):
            sigma = Permutation(rng.sample(range(1, k + 1), k))
            a, b = sorted(rng.sample(range(1, k + 1), 2))
            S = rep.perm(sigma)
            lhs = S @ rep.eps_ab(a, b) @ rep.perm(sigma.inverse())
            assert lhs == rep.eps_ab(sigma(a), sigma(b))


def test_symmetrizer_k2_is_v1():
    # formal words carry no relations, so compare images
    q = sample(2, 8)
    om = Fraction(-4)
    assert rho(q, symmetrizer_product(2, om), 2) == rho(q, brauer_generators("v_a", 1, 2, om), 2)


def test_symmetrizer_undefined():
    with pytest.raises(SymmetrizerUndefinedError):
        symmetrizer_product(4, -4)
    with pytest.raises(SymmetrizerUndefinedError):
        BrauerRep(sample(2, 1), 4).symmetrizer_product()
    with pytest.raises(SymmetrizerUndefinedError):
        symmetrizer_product(3, 0)


def test_augmentation():
    om = Fraction(-6)
    assert augmentation(BrauerElement.one(om, 3)) == 1
    assert augmentation(brauer_generators("v_a", 1, 3, om)) == 1
    for k in (2, 3, 4):
        assert augmentation(symmetrizer_product(k, om)) == 1
        assert augmentation(symmetrizer_sum(k, om)) == 1


@pytest.mark.parametrize("r,k", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_formal_and_operator_symmetrizers_agree(r, k):
    q = sample(r, 7)
    rep = BrauerRep(q, k)
    om = -2 * r
    S = rep(symmetrizer_product(k, om))
    assert S == rep.symmetrizer_product()
    assert rep(symmetrizer_sum(k, om)) == S == rep.symmetrizer_sum()


def test_sum_t0_term_is_type_a():
    q = sample(2, 5)
    om = -4
    for k in (2, 3):
        h = sum((perm_element(s, om) for s in Permutation.all(k)), BrauerElement(om, k))
        assert rho(q, h, k) * Fraction(1, len(list(Permutation.all(k)))) == pairing_type_a(q, k, "A")


@pytest.mark.parametrize("r", [2, 3])
def test_symmetrizer_absorbs_generators(r):
    q = sample(r, 1)
    for k in range(2, r + 2):
        rep = BrauerRep(q, k)
        S = rep.symmetrizer_product()
        for a in range(1, k):
            assert rep.gen("s", a) @ S == S == S @ rep.gen("s", a)
            assert (rep.gen("e", a) @ S).is_zero() and (S @ rep.gen("e", a)).is_zero()


def test_c_idempotent():
    assert c_idempotent(sample(1, 4)).is_zero()
    q = sample(2, 4)
    C = c_idempotent(q)
    assert C @ C == C
    assert rank(C) == 5
    Q = q_op(q)
    assert (Q @ C).is_zero() and (C @ Q).is_zero()
    assert transpose(C) == c_idempotent(invert(q))


def test_pairing_type_c():
    q = sample(2, 6)
    assert pairing_type_c(q, 1) == SparseOp.identity(q.basis, 1)
    assert pairing_type_c(q, 2) == c_idempotent(q)
    assert pairing_type_c(q, 3).is_zero()
    with pytest.raises(PairingUndefinedError):
        pairing_type_c(q, 4)
    C3 = pairing_type_c(sample(3, 6), 3)
    assert C3 @ C3 == C3
    assert rank(C3) == 14 == trace(C3)


def test_trace_closed_form_generic_omega():
    assert symmetrizer_trace(2, -4) == 5
    assert symmetrizer_trace(3, -6) == -14
    for r in (2, 3):
        om = -2 * r
        for k in range(1, r + 2):
            tr = (-1) ** k * (om + 2 * k - 2) / Fraction(om + k - 2) * gen_binom(om + k - 2, k)
            assert tr == (-1) ** k * symmetrizer_trace(k, om)


def test_trace_h_eps():
    assert trace_h_eps(sample(2, 1), 2, 0) == 6
    assert trace_h_eps(sample(2, 1), 2, 1) == trace_h_eps(sample(2, 2), 2, 1)
    with pytest.raises(ValueError):
        trace_h_eps(sample(2, 1), 2, 2)


def test_trace_h_eps_regression():
    # fixed at first implementation; equal for every sampled family
    values = {trace_h_eps(sample(3, s), 4, 2) for s in (1, 2, 3, 4, 5)}
    assert values == {Fraction(8)}


def test_relation_names():
    assert len(RELATION_NAMES) == 15
    assert sum(not n.startswith("derived") for n in RELATION_NAMES) == 12


@pytest.mark.parametrize("q", [non_deformed(2), sample(2, 1)])
def test_verify_relations_pass(q):
    report = verify_brauer_relations(q, 3)
    assert [rec["relation"] for rec in report if rec["status"] != "pass"] == []
    assert len(report) == 15 + 9


def test_verify_negative_control():
    q = sample(2, 1)
    qij = dict(q.qij)
    qij[-1, 1] = q.qij[-1, 1] * 3
    qij[1, -1] = 1 / qij[-1, 1]
    bad = ParameterFamily.unchecked(2, q.q, qij)
    assert {name for name, _ in bad.violations()} == {"vecq"}
    report = {rec["relation"]: rec for rec in verify_brauer_relations(bad, 3)}
    rec = report["local.sigma_a*eps_a=eps_a"]
    assert rec["status"] == "fail"
    row, col, value = rec["witness"]
    assert len(row) == len(col) == 3 and value != "0"
    # the triple-eps relation only involves Q and survives this corruption
    assert report["adjacent.eps_a*eps_a+1*eps_a=eps_a"]["status"] == "pass"
