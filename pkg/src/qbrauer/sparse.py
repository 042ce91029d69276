"""Exact sparse operators on tensor powers V^{⊗k}.

An operator T is stored column-major: ``cols[col_key][row_key] = value``
with every stored value a nonzero :class:`~fractions.Fraction`. A multi-index
``(x_1, ..., x_k)`` of basis labels is encoded as an integer in mixed radix
``n = dim V`` with site 1 most significant, so integer order on keys is the
lexicographic order on label tuples.

The basis of V is a sorted tuple of nonzero integer labels. The symplectic
basis of rank r is ``(-r, ..., -1, 1, ..., r)``; type-A operators use
``(1, ..., n)``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Tuple

from .exact import as_rational, format_rational, parse_rational

MultiIndex = Tuple[int, ...]


class InvalidSiteError(ValueError):
    pass


class InvalidDegreeError(ValueError):
    pass


class ShapeError(ValueError):
    pass


def symplectic_basis(r: int) -> Tuple[int, ...]:
    if r < 1:
        raise ValueError("rank r must be >= 1")
    return tuple(range(-r, 0)) + tuple(range(1, r + 1))


def plain_basis(n: int) -> Tuple[int, ...]:
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return tuple(range(1, n + 1))


def _check_basis(basis) -> Tuple[int, ...]:
    basis = tuple(int(x) for x in basis)
    if not basis:
        raise ValueError("empty basis")
    if 0 in basis:
        raise ValueError("index 0 is not a basis label")
    if list(basis) != sorted(set(basis)):
        raise ValueError("basis labels must be strictly increasing")
    return basis


class SparseOp:
    """Immutable exact operator on V^{⊗k}."""

    __slots__ = ("basis", "k", "n", "_cols", "_digit", "_weights")

    def __init__(self, basis, k: int, cols: Dict[int, Dict[int, Fraction]], _trusted=False):
        if k < 1:
            raise InvalidDegreeError("tensor degree k must be >= 1")
        self.basis = basis if _trusted else _check_basis(basis)
        self.k = k
        self.n = len(self.basis)
        self._digit = {x: d for d, x in enumerate(self.basis)}
        self._weights = tuple(self.n ** (k - 1 - s) for s in range(k))
        if _trusted:
            self._cols = cols
        else:
            size = self.n ** k
            clean = {}
            for c, col in cols.items():
                if not 0 <= c < size:
                    raise ShapeError("column key out of range")
                kept = {}
                for rk, v in col.items():
                    if not 0 <= rk < size:
                        raise ShapeError("row key out of range")
                    v = as_rational(v)
                    if v:
                        kept[rk] = v
                if kept:
                    clean[c] = kept
            self._cols = clean

    # -- construction -----------------------------------------------------

    @classmethod
    def from_entries(cls, basis, k: int, entries) -> "SparseOp":
        """Build from ``{(row, col): value}`` or an iterable of ``(row, col, value)``."""
        basis = _check_basis(basis)
        op = cls(basis, k, {}, _trusted=True)
        items = entries.items() if isinstance(entries, dict) else ((r, c, v) for r, c, v in entries)
        cols: Dict[int, Dict[int, Fraction]] = {}
        for item in items:
            if isinstance(entries, dict):
                (row, col), v = item
            else:
                row, col, v = item
            v = as_rational(v)
            if not v:
                continue
            rk, ck = op.key(row), op.key(col)
            col_d = cols.setdefault(ck, {})
            s = col_d.get(rk, 0) + v
            if s:
                col_d[rk] = s
            else:
                del col_d[rk]
                if not col_d:
                    del cols[ck]
        op._cols = cols
        return op

    @classmethod
    def identity(cls, basis, k: int) -> "SparseOp":
        basis = _check_basis(basis)
        size = len(basis) ** k
        return cls(basis, k, {c: {c: Fraction(1)} for c in range(size)}, _trusted=True)

    @classmethod
    def zero(cls, basis, k: int) -> "SparseOp":
        return cls(_check_basis(basis), k, {}, _trusted=True)

    def _new(self, cols) -> "SparseOp":
        return SparseOp(self.basis, self.k, cols, _trusted=True)

    # -- multi-index encoding ---------------------------------------------

    def key(self, idx) -> int:
        idx = tuple(idx)
        if len(idx) != self.k:
            raise ShapeError(f"multi-index {idx} has length {len(idx)}, expected {self.k}")
        try:
            return sum(self._digit[x] * w for x, w in zip(idx, self._weights))
        except KeyError:
            raise ShapeError(f"multi-index {idx} has a label outside {self.basis}") from None

    def index(self, key: int) -> MultiIndex:
        out = []
        for w in self._weights:
            d, key = divmod(key, w)
            out.append(self.basis[d])
        return tuple(out)

    def multi_indices(self) -> Iterator[MultiIndex]:
        return itertools.product(self.basis, repeat=self.k)

    # -- inspection -------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.n ** self.k

    @property
    def r(self) -> int:
        """Rank parameter of a symplectic basis (``dim V = 2r``)."""
        r = self.n // 2
        if self.basis != tuple(range(-r, 0)) + tuple(range(1, r + 1)):
            raise AttributeError("operator is not on a symplectic basis")
        return r

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._cols.values())

    def is_zero(self) -> bool:
        return not self._cols

    def __getitem__(self, rc) -> Fraction:
        row, col = rc
        return self._cols.get(self.key(col), {}).get(self.key(row), Fraction(0))

    def columns(self) -> Dict[int, Dict[int, Fraction]]:
        """Column-major view keyed by encoded multi-indices. Do not mutate."""
        return self._cols

    def entries(self) -> Iterator[Tuple[MultiIndex, MultiIndex, Fraction]]:
        """Nonzero entries sorted lexicographically by (row, col)."""
        flat = sorted((rk, ck) for ck, col in self._cols.items() for rk in col)
        for rk, ck in flat:
            yield self.index(rk), self.index(ck), self._cols[ck][rk]

    def to_dense(self):
        """Dense list-of-rows copy; for small operators and tests only."""
        size = self.dim
        rows = [[Fraction(0)] * size for _ in range(size)]
        for ck, col in self._cols.items():
            for rk, v in col.items():
                rows[rk][ck] = v
        return rows

    # -- algebra ----------------------------------------------------------

    def _compatible(self, other: "SparseOp"):
        if not isinstance(other, SparseOp):
            raise TypeError("expected a SparseOp")
        if self.basis != other.basis or self.k != other.k:
            raise ShapeError("operators act on different spaces")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseOp):
            return NotImplemented
        return self.basis == other.basis and self.k == other.k and self._cols == other._cols

    def __hash__(self):
        return hash((self.basis, self.k, tuple(e for e in self.entries())))

    def __add__(self, other: "SparseOp") -> "SparseOp":
        self._compatible(other)
        return self._new(_add_cols(self._cols, other._cols, 1))

    def __sub__(self, other: "SparseOp") -> "SparseOp":
        self._compatible(other)
        return self._new(_add_cols(self._cols, other._cols, -1))

    def __neg__(self) -> "SparseOp":
        return self._new({c: {rk: -v for rk, v in col.items()} for c, col in self._cols.items()})

    def __mul__(self, c) -> "SparseOp":
        if isinstance(c, SparseOp):
            raise TypeError("use @ for operator composition")
        c = as_rational(c)
        if not c:
            return self._new({})
        return self._new({ck: {rk: v * c for rk, v in col.items()} for ck, col in self._cols.items()})

    __rmul__ = __mul__

    def __truediv__(self, c) -> "SparseOp":
        return self * (1 / as_rational(c))

    def __matmul__(self, other: "SparseOp") -> "SparseOp":
        """Composition: ``(self @ other) x = self(other(x))``."""
        self._compatible(other)
        mine = self._cols
        out = {}
        for ck, col in other._cols.items():
            acc: Dict[int, Fraction] = {}
            for mk, bv in col.items():
                a_col = mine.get(mk)
                if a_col is None:
                    continue
                for rk, av in a_col.items():
                    acc[rk] = acc.get(rk, 0) + av * bv
            acc = {rk: v for rk, v in acc.items() if v}
            if acc:
                out[ck] = acc
        return self._new(out)

    def __pow__(self, e: int) -> "SparseOp":
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = SparseOp.identity(self.basis, self.k)
        for _ in range(e):
            out = out @ self
        return out

    def add_identity(self, c=1) -> "SparseOp":
        """Return ``self + c * 1``."""
        return self + SparseOp.identity(self.basis, self.k) * c

    def __repr__(self):
        return f"SparseOp(basis={self.basis}, k={self.k}, nnz={self.nnz})"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        out = {}
        try:
            out["r"] = self.r
        except AttributeError:
            out["n"] = self.n
        out["k"] = self.k
        out["entries"] = [[list(row), list(col), format_rational(v)] for row, col, v in self.entries()]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SparseOp":
        if "r" in data:
            basis = symplectic_basis(int(data["r"]))
        elif "n" in data:
            basis = plain_basis(int(data["n"]))
        else:
            raise ValueError("operator JSON needs an 'r' or 'n' field")
        k = int(data["k"])
        entries = [(tuple(row), tuple(col), parse_rational(v)) for row, col, v in data["entries"]]
        return cls.from_entries(basis, k, entries)


def _add_cols(a, b, sign):
    out = {c: dict(col) for c, col in a.items()}
    for ck, col in b.items():
        tgt = out.setdefault(ck, {})
        for rk, v in col.items():
            s = tgt.get(rk, 0) + sign * v
            if s:
                tgt[rk] = s
            else:
                tgt.pop(rk, None)
        if not tgt:
            del out[ck]
    return out


def embed_two_site(T: SparseOp, a: int, b: int, k: int) -> SparseOp:
    """T^{(ab)}: T's first factor on site a, second on site b, identity elsewhere."""
    if T.k != 2:
        raise InvalidDegreeError("embed_two_site expects a two-site operator")
    if not (1 <= a <= k and 1 <= b <= k) or a == b:
        raise InvalidSiteError(f"invalid sites a={a}, b={b} for k={k}")
    n = T.n
    wa, wb = n ** (k - a), n ** (k - b)
    others = [n ** (k - s) for s in range(1, k + 1) if s not in (a, b)]
    rest_keys = [0]
    for w in others:
        rest_keys = [base + d * w for base in rest_keys for d in range(n)]
    cols = {}
    for ck2, col in T.columns().items():
        l, m = divmod(ck2, n)
        for base in rest_keys:
            ck = base + l * wa + m * wb
            cols[ck] = {base + (rk2 // n) * wa + (rk2 % n) * wb: v for rk2, v in col.items()}
    return SparseOp(T.basis, k, cols, _trusted=True)


def transpose(T: SparseOp) -> SparseOp:
    cols: Dict[int, Dict[int, Fraction]] = {}
    for ck, col in T.columns().items():
        for rk, v in col.items():
            cols.setdefault(rk, {})[ck] = v
    return SparseOp(T.basis, T.k, cols, _trusted=True)


def swap_sites(T: SparseOp) -> SparseOp:
    """T^{(21)}: conjugation by the flip of the two tensor factors."""
    if T.k != 2:
        raise InvalidDegreeError("swap_sites expects a two-site operator")
    n = T.n

    def flip(key):
        hi, lo = divmod(key, n)
        return lo * n + hi

    cols = {flip(ck): {flip(rk): v for rk, v in col.items()} for ck, col in T.columns().items()}
    return SparseOp(T.basis, 2, cols, _trusted=True)


def trace(T: SparseOp) -> Fraction:
    return sum((col.get(ck, 0) for ck, col in T.columns().items()), Fraction(0))


def first_difference(A: SparseOp, B: SparseOp):
    """First (row, col, A-B value) where the operators differ, or None."""
    diff = A - B
    for row, col, v in diff.entries():
        return row, col, v
    return None


def kron_sites(ops: Iterable[SparseOp]) -> SparseOp:
    """Tensor product of one-site operators (k=1) into an operator on V^{⊗len}."""
    ops = list(ops)
    basis = ops[0].basis
    n = len(basis)
    cols = {0: {0: Fraction(1)}}
    for op in ops:
        if op.k != 1 or op.basis != basis:
            raise ShapeError("kron_sites expects one-site operators on a common basis")
        new = {}
        for ck, col in cols.items():
            for c1, col1 in op.columns().items():
                new[ck * n + c1] = {rk * n + r1: v * v1 for rk, v in col.items() for r1, v1 in col1.items()}
        cols = new
    return SparseOp(basis, len(ops), cols, _trusted=True)
