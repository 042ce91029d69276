"""Exact rank computations over the rationals.

Two independent kernels: a sparse incremental echelon basis (used for large
operators, relation spans and quotient normal forms) and dense fraction-free
Bareiss elimination over the integers (used for small operators and as a
cross-check in the tests). No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Sequence

from .sparse import ShapeError, SparseOp

#: operators of at most this dimension go through dense Bareiss elimination
DENSE_LIMIT = 64

SparseVec = Dict[int, Fraction]


class EchelonBasis:
    """Incrementally built echelon basis of a subspace of K^N.

    Vectors are sparse dicts ``key -> Fraction``. Each stored row has a pivot
    key with coefficient 1 and no entries on the pivots of earlier rows.
    :meth:`reduce` returns the unique representative of ``v + span`` that
    vanishes on every pivot, so it is a canonical form modulo the span.
    """

    def __init__(self, prefer_high: bool = True):
        self._rows: Dict[int, SparseVec] = {}
        self._order: Dict[int, int] = {}
        self._prefer_high = prefer_high

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self):
        return sorted(self._rows, key=self._order.__getitem__)

    def rows(self) -> List[SparseVec]:
        return [self._rows[p] for p in self.pivots]

    def reduce(self, v) -> SparseVec:
        v = {k: Fraction(x) for k, x in v.items() if x}
        order = self._order
        while True:
            best = None
            for key in v:
                o = order.get(key)
                if o is not None and (best is None or o < best):
                    best, pkey = o, key
            if best is None:
                return v
            c = v[pkey]
            for key, rv in self._rows[pkey].items():
                s = v.get(key, 0) - c * rv
                if s:
                    v[key] = s
                else:
                    v.pop(key, None)

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def add(self, v) -> bool:
        """Insert v; return True iff it enlarged the span."""
        w = self.reduce(v)
        if not w:
            return False
        pivot = max(w) if self._prefer_high else min(w)
        inv = 1 / w[pivot]
        self._rows[pivot] = {key: x * inv for key, x in w.items()}
        self._order[pivot] = len(self._order)
        return True

    def extend(self, vectors: Iterable) -> "EchelonBasis":
        for v in vectors:
            self.add(v)
        return self


def span_rank(vectors: Iterable) -> int:
    return EchelonBasis().extend(vectors).rank


def _integer_rows(rows: Sequence[Sequence]) -> List[List[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a dense rational matrix by fraction-free elimination."""
    M = _integer_rows(rows)
    m = len(M)
    if m == 0:
        return 0
    n = len(M[0])
    rank, prev = 0, 1
    for col in range(n):
        piv = next((i for i in range(rank, m) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        top = M[rank]
        for i in range(rank + 1, m):
            row = M[i]
            f = row[col]
            for j in range(col + 1, n):
                row[j] = (row[j] * p - f * top[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def rank(T: SparseOp) -> int:
    """Exact rank of an operator."""
    if T.is_zero():
        return 0
    if T.dim <= DENSE_LIMIT:
        return bareiss_rank(T.to_dense())
    return sparse_rank(T)


def sparse_rank(T: SparseOp) -> int:
    return span_rank(T.columns().values())


def colspace_contained(A: SparseOp, Bs: Sequence[SparseOp]) -> bool:
    """Is the column space of A inside the sum of the column spaces of Bs?"""
    for B in Bs:
        if B.basis != A.basis or B.k != A.k:
            raise ShapeError("operators act on different spaces")
    basis = EchelonBasis()
    for B in Bs:
        basis.extend(B.columns().values())
    return all(basis.contains(col) for col in A.columns().values())
