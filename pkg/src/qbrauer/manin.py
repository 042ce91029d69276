"""Manin matrices over noncommutative rings, and their S- and A-minors.

Matrix entries live in any ring satisfying a small contract (``zero``,
``one``, ``is_zero`` plus the arithmetic operators on elements, including
left and right multiplication by Fractions). Two rings ship here: the
rationals, and :class:`TruncatedQuotientRing`, a degree-truncated quotient
of a free algebra by homogeneous quadratic relations whose elements are kept
in a canonical form computed by exact linear algebra.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .brauer import c_idempotent, pairing_type_c
from .exact import as_rational, format_rational
from .linalg import EchelonBasis
from .params import ParameterFamily, TypeAParams
from .quadratic import ResourceLimitError, ideal_basis, word_cap
from .sparse import ShapeError, SparseOp, symplectic_basis
from .symmetric import pairing_type_a


class TruncationError(ArithmeticError):
    pass


class InvalidInputError(ValueError):
    pass


class RationalField:
    """The ground field; elements are plain Fractions."""

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return as_rational(x)

    def is_zero(self, x) -> bool:
        return x == 0

    def random_element(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randint(-20, 20), rng.randint(1, 20))

    def terms(self, x):
        return [((), Fraction(x))] if x else []

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class TruncatedQuotientRing:
    """K<g generators> / (degree-2 relations), truncated above degree ``dmax``.

    ``relations`` are sparse dicts over degree-2 word keys ``a * g + b``.
    For every degree d <= dmax the relation subspace (all u R v) is stored
    as an echelon basis; an element's canonical form has each homogeneous
    part reduced modulo that subspace.
    """

    def __init__(self, g: int, dmax: int, relations=(), gen_names=None, cap: int = None):
        if g < 1 or dmax < 0:
            raise ValueError("need g >= 1 and dmax >= 0")
        cap = word_cap() if cap is None else cap
        if g ** dmax > cap:
            raise ResourceLimitError(f"{g}^{dmax} words exceed the word cap {cap}")
        self.g = g
        self.dmax = dmax
        self.gen_names = list(gen_names) if gen_names is not None else list(range(g))
        deg2 = EchelonBasis().extend(relations)
        self._bases: Dict[int, EchelonBasis] = {}
        if dmax >= 2 and deg2.rank:
            rows = deg2.rows()
            self._bases[2] = deg2
            for d in range(3, dmax + 1):
                self._bases[d] = ideal_basis(rows, g, d)
        self.zero = QuotientElement(self, {})
        self.one = QuotientElement(self, {(): Fraction(1)})

    def __repr__(self):
        return f"TruncatedQuotientRing(g={self.g}, dmax={self.dmax})"

    def gen(self, a: int) -> "QuotientElement":
        return QuotientElement(self, {(a,): Fraction(1)})

    def __call__(self, x) -> "QuotientElement":
        if isinstance(x, QuotientElement):
            return x
        return QuotientElement(self, {(): as_rational(x)})

    def is_zero(self, x) -> bool:
        return not x.terms

    def component_dim(self, d: int) -> int:
        basis = self._bases.get(d)
        return self.g ** d - (basis.rank if basis else 0)

    def relation_rank(self, d: int) -> int:
        basis = self._bases.get(d)
        return basis.rank if basis else 0

    def _key(self, word) -> int:
        key = 0
        for a in word:
            key = key * self.g + a
        return key

    def _word(self, key: int, d: int) -> Tuple[int, ...]:
        out = []
        for _ in range(d):
            key, a = divmod(key, self.g)
            out.append(a)
        return tuple(reversed(out))

    def reduce(self, terms: Dict[Tuple[int, ...], Fraction]) -> Dict[Tuple[int, ...], Fraction]:
        """Canonical form of a sum of words."""
        by_degree: Dict[int, Dict[int, Fraction]] = {}
        for w, c in terms.items():
            if not c:
                continue
            d = len(w)
            if d > self.dmax:
                raise TruncationError(f"degree {d} exceeds the truncation degree {self.dmax}")
            part = by_degree.setdefault(d, {})
            key = self._key(w)
            part[key] = part.get(key, 0) + c
        out = {}
        for d, part in by_degree.items():
            basis = self._bases.get(d)
            if basis is not None:
                part = basis.reduce(part)
            for key, c in part.items():
                if c:
                    out[self._word(key, d)] = c
        return out

    def random_element(self, rng: random.Random, max_degree: int = None, size: int = 3):
        max_degree = self.dmax if max_degree is None else max_degree
        terms = {}
        for _ in range(size):
            d = rng.randint(0, max_degree)
            w = tuple(rng.randrange(self.g) for _ in range(d))
            terms[w] = terms.get(w, 0) + Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        return QuotientElement(self, self.reduce(terms))

    def terms(self, x):
        return sorted(x.terms.items(), key=lambda t: (len(t[0]), t[0]))


class QuotientElement:
    """Element of a TruncatedQuotientRing, always stored in canonical form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: TruncatedQuotientRing, terms):
        self.ring = ring
        self.terms = {w: c for w, c in terms.items() if c}

    def _other(self, other) -> "QuotientElement":
        if isinstance(other, QuotientElement):
            if other.ring is not self.ring:
                raise ValueError("elements of different rings")
            return other
        return self.ring(other)

    def __add__(self, other):
        other = self._other(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return QuotientElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return QuotientElement(self.ring, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, QuotientElement):
            c = as_rational(other)
            return QuotientElement(self.ring, {w: v * c for w, v in self.terms.items()})
        other = self._other(other)
        out: Dict[Tuple[int, ...], Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return QuotientElement(self.ring, self.ring.reduce(out))

    def __rmul__(self, c):
        c = as_rational(c)
        return QuotientElement(self.ring, {w: v * c for w, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, QuotientElement):
            return self.ring is other.ring and self.terms == other.terms
        try:
            return self == self.ring(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])):
            parts.append(f"{format_rational(c)}*{'·'.join(f'm{a}' for a in w) or '1'}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# matrices


class RingMatrix:
    """Matrix with rows indexed by (row_basis)^k and columns by (col_basis)^k.

    ``entries`` maps (row multi-index, column multi-index) to a nonzero ring
    element; absent entries are zero.
    """

    def __init__(self, ring, row_basis, col_basis, entries=None, k: int = 1):
        self.ring = ring
        self.row_basis = tuple(row_basis)
        self.col_basis = tuple(col_basis)
        self.k = k
        self.entries = {}
        for (row, col), x in (entries or {}).items():
            row, col = tuple(row), tuple(col)
            if len(row) != k or len(col) != k:
                raise ShapeError("multi-index length differs from k")
            if any(i not in self.row_basis for i in row) or any(a not in self.col_basis for a in col):
                raise ShapeError(f"index ({row}, {col}) out of range")
            if not ring.is_zero(x):
                self.entries[row, col] = x

    @property
    def shape(self):
        return len(self.row_basis) ** self.k, len(self.col_basis) ** self.k

    def __getitem__(self, rc):
        return self.entries.get((tuple(rc[0]), tuple(rc[1])), self.ring.zero)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.row_basis, self.col_basis, self.k) == (other.row_basis, other.col_basis, other.k) \
            and self.entries == other.entries

    def is_zero(self) -> bool:
        return not self.entries

    def tensor_power(self, k: int) -> "RingMatrix":
        """M^{(1)} M^{(2)} ... M^{(k)}: entry (I, A) = M[i_1,a_1] M[i_2,a_2] ... M[i_k,a_k]."""
        if self.k != 1:
            raise ShapeError("tensor_power needs a plain matrix")
        if k < 1:
            raise ValueError("k must be >= 1")
        cur = dict(self.entries)
        for _ in range(k - 1):
            nxt = {}
            for (I, A), x in cur.items():
                for (i, a), y in self.entries.items():
                    z = x * y
                    if not self.ring.is_zero(z):
                        nxt[I + i, A + a] = z
            cur = nxt
        return RingMatrix(self.ring, self.row_basis, self.col_basis, cur, k=k)

    def lmul(self, T: SparseOp) -> "RingMatrix":
        """T · self for a rational operator T on the row space."""
        if T.basis != self.row_basis or T.k != self.k:
            raise ShapeError("operator does not act on the row space")
        by_row: Dict[Tuple, List] = {}
        for (J, G), x in self.entries.items():
            by_row.setdefault(J, []).append((G, x))
        out: Dict = {}
        for ck, col in T.columns().items():
            J = T.index(ck)
            targets = by_row.get(J)
            if not targets:
                continue
            for rk, t in col.items():
                I = T.index(rk)
                for G, x in targets:
                    key = (I, G)
                    out[key] = out[key] + t * x if key in out else t * x
        return RingMatrix(self.ring, self.row_basis, self.col_basis, out, k=self.k)

    def rmul(self, T: SparseOp) -> "RingMatrix":
        """self · T for a rational operator T on the column space."""
        if T.basis != self.col_basis or T.k != self.k:
            raise ShapeError("operator does not act on the column space")
        cols = T.columns()
        out: Dict = {}
        for (I, D), x in self.entries.items():
            col_key = T.key(D)
            # row D of T: entries T[D, G] for every column G
            for gk, col in cols.items():
                t = col.get(col_key)
                if t is None:
                    continue
                key = (I, T.index(gk))
                out[key] = out[key] + x * t if key in out else x * t
        return RingMatrix(self.ring, self.row_basis, self.col_basis, out, k=self.k)

    def first_nonzero(self):
        if not self.entries:
            return None
        key = min(self.entries)
        return key[0], key[1], self.entries[key]

    def to_json(self) -> dict:
        rows = []
        for (I, G) in sorted(self.entries):
            x = self.entries[I, G]
            rows.append([list(I), list(G), [[list(w), format_rational(c)] for w, c in self.ring.terms(x)]])
        out = {
            "k": self.k,
            "row_basis": list(self.row_basis),
            "col_basis": list(self.col_basis),
            "entries": rows,
        }
        names = getattr(self.ring, "gen_names", None)
        if names is not None:
            out["generators"] = [list(n) if isinstance(n, tuple) else n for n in names]
        return out


class IdempotentPair:
    """Idempotents A on V⊗V and Ã on Ṽ⊗Ṽ (checked on construction)."""

    def __init__(self, A: SparseOp, A_tilde: SparseOp):
        for name, op in (("A", A), ("A_tilde", A_tilde)):
            if op.k != 2:
                raise ShapeError(f"{name} must act on a two-fold tensor power")
            if op @ op != op:
                raise InvalidInputError(f"{name} is not idempotent")
        self.A = A
        self.A_tilde = A_tilde

    @property
    def V(self):
        return self.A.basis

    @property
    def Vt(self):
        return self.A_tilde.basis


def manin_check(pair: IdempotentPair, M: RingMatrix) -> dict:
    """Evaluate A M^{(1)} M^{(2)} (1 - Ã) and report the first nonzero component."""
    if M.k != 1 or M.row_basis != pair.V or M.col_basis != pair.Vt:
        raise ShapeError("matrix shape does not match the idempotent pair")
    one_minus = (-pair.A_tilde).add_identity(1)
    tensor = M.tensor_power(2).lmul(pair.A).rmul(one_minus)
    hit = tensor.first_nonzero()
    if hit is None:
        return {"relation": "manin", "status": "pass", "witness": None}
    I, G, x = hit
    return {
        "relation": "manin",
        "status": "fail",
        "witness": [list(I), list(G), [[list(w), format_rational(c)] for w, c in M.ring.terms(x)]],
    }


def minor_s(M: RingMatrix, S_tilde: SparseOp) -> RingMatrix:
    """Matrix of S-minors M^{(1)}...M^{(k)} S̃_(k)."""
    if S_tilde.basis != M.col_basis:
        raise ShapeError("S-operator does not act on the column space")
    return M.tensor_power(S_tilde.k).rmul(S_tilde)


def minor_a(M: RingMatrix, q, k: int) -> RingMatrix:
    """Matrix of A-minors A_(k) M^{(1)}...M^{(k)}.

    For a ParameterFamily, A_(k) = C_{q,(k)} (k <= r+1); for TypeAParams,
    A_(k) is the type-A operator.
    """
    if isinstance(q, ParameterFamily):
        op = pairing_type_c(q, k)
    elif isinstance(q, TypeAParams):
        op = pairing_type_a(q, k, "A")
    else:
        raise TypeError("q must be a ParameterFamily or TypeAParams")
    if op.basis != M.row_basis:
        raise ShapeError("pairing operator does not act on the row space")
    return M.tensor_power(k).lmul(op)


# ---------------------------------------------------------------------------
# the universal ring and example matrices


def manin_relations(pair: IdempotentPair):
    """Components of A M^{(1)} M^{(2)} (1-Ã) as vectors over words in the m^i_alpha."""
    V, Vt = pair.V, pair.Vt
    nt = len(Vt)
    gen = {(i, a): di * nt + da for di, i in enumerate(V) for da, a in enumerate(Vt)}
    g = len(gen)
    one_minus = (-pair.A_tilde).add_identity(1)
    # right factor: for each column (gamma, delta), the row entries (alpha, beta) -> value
    right = {}
    for ck, col in one_minus.columns().items():
        for rk, v in col.items():
            right.setdefault(ck, []).append((one_minus.index(rk), v))
    rels = []
    for (I, LM) in _nonzero_pairs(pair.A):
        c_left = pair.A[I, LM]
        l, m = LM
        for ck, rows in right.items():
            rel = {}
            for (a, b), v in rows:
                key = gen[l, a] * g + gen[m, b]
                rel[key] = rel.get(key, 0) + c_left * v
            rels.append((I, one_minus.index(ck), rel))
    merged: Dict = {}
    for I, G, rel in rels:
        tgt = merged.setdefault((I, G), {})
        for key, v in rel.items():
            tgt[key] = tgt.get(key, 0) + v
    return [{k: v for k, v in rel.items() if v} for rel in merged.values()], gen


def _nonzero_pairs(T: SparseOp):
    for row, col, _ in T.entries():
        yield row, col


def universal_manin_ring(pair: IdempotentPair, dmax: int, cap: int = None) -> TruncatedQuotientRing:
    """Free algebra on the m^i_alpha modulo the Manin relations of ``pair``, truncated at dmax."""
    if dmax < 2:
        raise ValueError("dmax must be >= 2")
    rels, gen = manin_relations(pair)
    names = [None] * len(gen)
    for ia, a in gen.items():
        names[a] = ia
    return TruncatedQuotientRing(len(gen), dmax, [r for r in rels if r], gen_names=names, cap=cap)


def generic_matrix(ring: TruncatedQuotientRing, row_basis, col_basis) -> RingMatrix:
    """The matrix (m^i_alpha) of generators of a universal ring."""
    entries = {}
    for a, (i, al) in enumerate(ring.gen_names):
        entries[(i,), (al,)] = ring.gen(a)
    return RingMatrix(ring, row_basis, col_basis, entries)


def identity_matrix(basis, ring=QQ) -> RingMatrix:
    return RingMatrix(ring, basis, basis, {((i,), (i,)): ring.one for i in basis})


def symplectic_transvection(r: int, v: Dict[int, Fraction], c) -> RingMatrix:
    """x -> x + c * omega(v, x) v for the canonical form omega(x, y) = sum_i eps_i x_i y_{-i}."""
    basis = symplectic_basis(r)
    c = as_rational(c)
    vec = {i: as_rational(v.get(i, 0)) for i in basis}
    if not any(vec.values()):
        raise InvalidInputError("transvection vector must be nonzero")
    # (v^T Omega)_j = sum_i v_i Omega_{ij} = eps_{-j} v_{-j}
    row = {j: (1 if -j > 0 else -1) * vec[-j] for j in basis}
    entries = {}
    for i in basis:
        for j in basis:
            x = Fraction(int(i == j)) + c * vec[i] * row[j]
            if x:
                entries[(i,), (j,)] = x
    return RingMatrix(QQ, basis, basis, entries)


def example_matrices(kind: str, params: dict) -> RingMatrix:
    """Fixture matrices that are Manin for their documented idempotent pair.

    * ``identity``: params ``basis`` (and optional ``ring``); Manin for (A, A).
    * ``central_scalar``: params ``basis``, ``dmax``; t * identity with t the
      free central generator of a one-generator ring; Manin for (A, A).
    * ``symplectic_elementary``: params ``r``, ``v`` (label -> value), ``c``;
      a rational symplectic transvection, Manin for (C, C) at q = 1.
    * ``universal``: params ``q`` (ParameterFamily), optional ``ptilde``
      (TypeAParams; default Ã = C_q) and ``dmax``; the generic matrix over
      the universal ring of (C_q, Ã).
    """
    try:
        if kind == "identity":
            return identity_matrix(tuple(params["basis"]), params.get("ring", QQ))
        if kind == "central_scalar":
            ring = TruncatedQuotientRing(1, int(params.get("dmax", 4)), gen_names=["t"])
            basis = tuple(params["basis"])
            return RingMatrix(ring, basis, basis, {((i,), (i,)): ring.gen(0) for i in basis})
        if kind == "symplectic_elementary":
            return symplectic_transvection(int(params["r"]), params["v"], params.get("c", 1))
        if kind == "universal":
            q = params["q"]
            pair = universal_pair(q, params.get("ptilde"))
            ring = universal_manin_ring(pair, int(params.get("dmax", 2)))
            return generic_matrix(ring, pair.V, pair.Vt)
    except KeyError as exc:
        raise InvalidInputError(f"missing parameter {exc}") from None
    raise InvalidInputError(f"unknown example kind {kind!r}")


def universal_pair(q: ParameterFamily, ptilde: TypeAParams = None) -> IdempotentPair:
    """(C_q, A_p̂) with A_p̂ = (1 - P_p̂)/2, or (C_q, C_q) when no p̂ is given."""
    A = c_idempotent(q)
    if ptilde is None:
        return IdempotentPair(A, A)
    return IdempotentPair(A, pairing_type_a(ptilde, 2, "A"))


def rational_matrix(basis_rows: Sequence[int], basis_cols: Sequence[int], values) -> RingMatrix:
    """Rational matrix from a nested list ordered by the bases."""
    entries = {}
    for i, row in zip(basis_rows, values):
        for a, x in zip(basis_cols, row):
            entries[(i,), (a,)] = as_rational(x)
    return RingMatrix(QQ, basis_rows, basis_cols, entries)
