"""Quadratic algebras of type A and C, their graded dimensions, and q-Grassmann normal forms.

A :class:`RelationSet` lists degree-2 relations ``sum c * g1 g2 = 0`` over
generators named by basis labels. :func:`component_dim` computes graded
dimensions of the quotient of the free algebra by brute-force linear algebra
on words, independently of the pairing operators.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from .brauer import c_idempotent, pairing_type_c
from .linalg import EchelonBasis, rank
from .params import ParameterFamily, mu, sample
from .symmetric import Permutation

DEFAULT_WORD_CAP = 200_000


class ResourceLimitError(RuntimeError):
    pass


class InternalConsistencyError(AssertionError):
    pass


def word_cap() -> int:
    return int(os.environ.get("QBRAUER_WORD_CAP", DEFAULT_WORD_CAP))


Relation = Tuple[Tuple[Tuple[int, int], Fraction], ...]


def _relation(terms: Dict[Tuple[int, int], Fraction]) -> Relation:
    return tuple(sorted((k, Fraction(v)) for k, v in terms.items() if v))


@dataclass(frozen=True)
class RelationSet:
    """Degree-2 relations over generators labelled by ``labels``."""

    labels: Tuple[int, ...]
    relations: Tuple[Relation, ...]

    def __post_init__(self):
        known = set(self.labels)
        for rel in self.relations:
            if not rel:
                raise ValueError("zero relation")
            for (g1, g2), _ in rel:
                if g1 not in known or g2 not in known:
                    raise ValueError(f"generator outside {self.labels}")

    @classmethod
    def build(cls, labels, relations) -> "RelationSet":
        rels = tuple(r for r in (_relation(t) for t in relations) if r)
        return cls(tuple(labels), rels)

    @property
    def n(self) -> int:
        return len(self.labels)

    def vectors(self) -> List[Dict[int, Fraction]]:
        """Relations as sparse vectors over degree-2 word keys ``d1 * n + d2``."""
        digit = {x: d for d, x in enumerate(self.labels)}
        n = self.n
        return [{digit[a] * n + digit[b]: c for (a, b), c in rel} for rel in self.relations]

    def span_rank(self) -> int:
        return EchelonBasis().extend(self.vectors()).rank


def _grassmann_terms(labels, pair) -> List[Dict]:
    out = []
    for a, i in enumerate(labels):
        for j in labels[a:]:
            terms = {(i, j): Fraction(1)}
            terms[j, i] = terms.get((j, i), 0) + pair(i, j)
            out.append(terms)
    return out


def relations_xi_c(q: ParameterFamily, dual: bool = False, contraction: bool = True) -> RelationSet:
    """Relations of Xi_{C_q} (or of the starred algebra with ``dual=True``).

    psi_i psi_j + q_ij psi_j psi_i = 0 for i <= j and sum_{i=1..r} q_i psi_i psi_{-i} = 0;
    the starred algebra uses 1/q_ij and 1/q_i. ``contraction=False`` drops
    the last relation, leaving the q-Grassmann algebra.
    """
    labels = q.basis
    if dual:
        rels = _grassmann_terms(labels, lambda i, j: 1 / q.pair(i, j))
        contr = {(i, -i): 1 / q.q[i] for i in range(1, q.r + 1)}
    else:
        rels = _grassmann_terms(labels, q.pair)
        contr = {(i, -i): q.q[i] for i in range(1, q.r + 1)}
    if contraction:
        rels.append(contr)
    return RelationSet.build(labels, rels)


def relations_xi_a(p) -> RelationSet:
    """q-Grassmann relations psi_i psi_j + p_ij psi_j psi_i = 0 for a parameter matrix."""
    return RelationSet.build(p.basis, _grassmann_terms(p.basis, p.pair))


def relations_x_c(q: ParameterFamily) -> RelationSet:
    """Relations of X_{C_q} with lambda substituted.

    x^i x^j - q_ji x^j x^i - eps_i q_i delta_{i,-j} lambda = 0, where
    lambda = (1/r) sum_{l=1..r} (x^l x^{-l} / q_l - q_l x^{-l} x^l).
    Identically vanishing rows (for instance all rows when r = 1) are dropped.
    """
    r = q.r
    lam = {}
    for l in range(1, r + 1):
        lam[l, -l] = lam.get((l, -l), 0) + Fraction(1, r) / q.q[l]
        lam[-l, l] = lam.get((-l, l), 0) - Fraction(1, r) * q.q[l]
    rels = []
    for i in q.basis:
        for j in q.basis:
            terms = {(i, j): Fraction(1)}
            terms[j, i] = terms.get((j, i), 0) - q.pair(j, i)
            if j == -i:
                f = (1 if i > 0 else -1) * q.q[i]
                for key, c in lam.items():
                    terms[key] = terms.get(key, 0) - f * c
            rels.append(terms)
    return RelationSet.build(q.basis, rels)


def component_dim(rels: RelationSet, d: int, cap: int = None) -> int:
    """Dimension of the degree-d component of the free algebra modulo (rels)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    n = rels.n
    cap = word_cap() if cap is None else cap
    if n ** d > cap:
        raise ResourceLimitError(f"{n}^{d} = {n ** d} words exceed the word cap {cap}")
    if d == 1:
        return n
    base = EchelonBasis().extend(rels.vectors())
    return n ** d - ideal_basis(base.rows(), n, d).rank


def ideal_basis(degree2_rows, n: int, d: int) -> EchelonBasis:
    """Echelon basis of span{u R v : |u| + |v| = d - 2} inside the degree-d words."""
    basis = EchelonBasis()
    for left in range(d - 1):
        right = d - 2 - left
        lw, rw = n ** left, n ** right
        for R in degree2_rows:
            for u in range(lw):
                for v in range(rw):
                    basis.add({(u * n * n + key) * rw + v: c for key, c in R.items()})
    return basis


def dim_formula(r: int, k: int) -> int:
    """(2r-2k+2)/k * C(2r+1, k-1) for k <= r+1, and 0 beyond."""
    if r < 1 or k < 1:
        raise ValueError("need r >= 1 and k >= 1")
    if k > r + 1:
        return 0
    value = Fraction(2 * r - 2 * k + 2, k) * comb(2 * r + 1, k - 1)
    if value.denominator != 1 or value < 0:
        raise InternalConsistencyError(f"dimension formula gave {value} at r={r}, k={k}")
    return int(value)


@dataclass(frozen=True)
class NormalMonomial:
    """coefficient * (product of generators in ``word``); ``word`` is increasing."""

    coefficient: Fraction
    word: Tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0


def grassmann_normal_form(word: Sequence[int], q, variant: str = "lower") -> NormalMonomial:
    """Rewrite a q-Grassmann monomial as a multiple of its sorted form.

    ``lower``: psi_{i_sigma(1)}...psi_{i_sigma(k)} = sign(sigma)/mu_I(sigma) psi_{i_1}...psi_{i_k};
    ``upper``: the starred generators pick up sign(sigma) * mu_I(sigma).
    Words with a repeated index are zero.
    """
    if variant not in ("lower", "upper"):
        raise ValueError("variant must be 'lower' or 'upper'")
    word = tuple(word)
    if len(set(word)) != len(word):
        return NormalMonomial(Fraction(0), ())
    I = tuple(sorted(word))
    if not word:
        return NormalMonomial(Fraction(1), ())
    pos = {x: p for p, x in enumerate(I, start=1)}
    sigma = Permutation(pos[x] for x in word)
    m = mu(I, sigma, q)
    coeff = Fraction(sigma.sign()) * (1 / m if variant == "lower" else m)
    return NormalMonomial(coeff, I)


# ---------------------------------------------------------------------------
# dimension tables

DIM_COLUMNS = ["seed", "r", "k", "formula", "rank_pairing", "quotient_dim", "agree"]


def family_dimension_rows(q: ParameterFamily, kmax: int, seed=None) -> List[dict]:
    """Rows for k = 1..kmax of one family: formula, rank(C_{q,(k)}), quotient dimension."""
    rels = relations_xi_c(q)
    rows = []
    for k in range(1, kmax + 1):
        formula = dim_formula(q.r, k)
        rk = rank(pairing_type_c(q, k))
        qd = component_dim(rels, k)
        rows.append({
            "seed": seed, "r": q.r, "k": k, "formula": formula,
            "rank_pairing": rk, "quotient_dim": qd,
            "agree": formula == rk == qd,
        })
    return rows


def dimension_rows(r: int, kmax: int, seeds: Sequence[int]) -> List[dict]:
    """One row per (seed, k), sorted by seed then k."""
    rows = []
    for seed in sorted(seeds):
        rows.extend(family_dimension_rows(sample(r, seed), kmax, seed))
    return rows


def dimension_csv(rows: List[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=DIM_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({**row, "agree": "true" if row["agree"] else "false"})
    return buf.getvalue()


def c_relation_rank(q: ParameterFamily) -> int:
    """rank(C_q); the number of independent relations of X_{C_q}."""
    return rank(c_idempotent(q))
