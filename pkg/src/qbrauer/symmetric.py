"""Symmetric-group representations on V^{⊗k} built from the q-permutation operator.

``sigma_a -> ±P^{(a,a+1)}`` defines the representations rho^±; averaging over
S_k gives the type-A pairing operators S_(k) (sign +) and A_(k) (sign -).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import List, Sequence

from .params import mu
from .sparse import SparseOp, embed_two_site


class Permutation(tuple):
    """A permutation of {1..k} given by its images (sigma(1), ..., sigma(k))."""

    def __new__(cls, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(1, k + 1))

    @classmethod
    def adjacent(cls, a: int, k: int) -> "Permutation":
        """The transposition sigma_a = (a, a+1)."""
        images = list(range(1, k + 1))
        images[a - 1], images[a] = images[a], images[a - 1]
        return cls(images)

    @classmethod
    def transposition(cls, a: int, b: int, k: int) -> "Permutation":
        images = list(range(1, k + 1))
        images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
        return cls(images)

    @classmethod
    def all(cls, k: int):
        return (cls(p) for p in itertools.permutations(range(1, k + 1)))

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(x) = self(other(x))."""
        return Permutation(self[o - 1] for o in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for pos, img in enumerate(self, start=1):
            inv[img - 1] = pos
        return Permutation(inv)

    def inversions(self) -> int:
        return sum(1 for s, t in itertools.combinations(range(len(self)), 2) if self[s] > self[t])

    def sign(self) -> int:
        return -1 if self.inversions() % 2 else 1

    def adjacent_word(self) -> List[int]:
        """A reduced word (a_1, ..., a_m) with self = sigma_{a_1} ... sigma_{a_m}.

        Found by bubble sort: right-multiplying by sigma_a at a descent
        removes one inversion.
        """
        images = list(self)
        found = []
        while True:
            for a in range(len(images) - 1):
                if images[a] > images[a + 1]:
                    images[a], images[a + 1] = images[a + 1], images[a]
                    found.append(a + 1)
                    break
            else:
                break
        return found[::-1]


def p_op(q) -> SparseOp:
    """The q-permutation operator: e_i ⊗ e_j -> q_ij e_j ⊗ e_i.

    Accepts a ParameterFamily (symplectic basis) or TypeAParams (labels 1..n).
    """
    basis = q.basis
    n = len(basis)
    cols = {}
    for di, i in enumerate(basis):
        for dj, j in enumerate(basis):
            cols[di * n + dj] = {dj * n + di: Fraction(q.pair(i, j))}
    return SparseOp(basis, 2, cols, _trusted=True)


def adjacent_images(P: SparseOp, k: int, sign: int) -> List[SparseOp]:
    """[sign * P^{(a,a+1)} for a = 1..k-1]."""
    return [embed_two_site(P, a, a + 1, k) * sign for a in range(1, k)]


def rho_perm(sigma: Sequence[int], sign: str, q, k: int, _gens=None) -> SparseOp:
    """Image of sigma under rho^+ (sign "+") or rho^- (sign "-")."""
    sigma = Permutation(sigma)
    if sigma.degree != k:
        raise ValueError("permutation degree differs from k")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    gens = _gens or adjacent_images(p_op(q), k, 1 if sign == "+" else -1)
    out = SparseOp.identity(q.basis, k)
    for a in sigma.adjacent_word():
        out = out @ gens[a - 1]
    return out


def pairing_type_a(q, k: int, kind: str) -> SparseOp:
    """S_(k) = rho^+(h_(k)) (kind "S") or A_(k) = rho^-(h_(k)) (kind "A")."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if kind not in ("S", "A"):
        raise ValueError("kind must be 'S' or 'A'")
    sign = "+" if kind == "S" else "-"
    gens = adjacent_images(p_op(q), k, 1 if kind == "S" else -1)
    total = SparseOp.zero(q.basis, k)
    for sigma in Permutation.all(k):
        total = total + rho_perm(sigma, sign, q, k, _gens=gens)
    return total / factorial(k)


def a_entry_closed_form(I: Sequence[int], sigma: Sequence[int], q, k: int) -> Fraction:
    """The entry of A_(k) at row (i_sigma(1), ..., i_sigma(k)), column I.

    Equal to sign(sigma) mu_I(q, sigma) / k! for pairwise distinct indices.
    """
    I = tuple(I)
    sigma = Permutation(sigma)
    if len(I) != k or sigma.degree != k:
        raise ValueError("index tuple and permutation must have length k")
    if len(set(I)) != k:
        raise ValueError("closed form needs pairwise distinct indices")
    return Fraction(sigma.sign()) * mu(I, sigma, q) / factorial(k)
