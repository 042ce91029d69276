"""The Brauer algebra B_k(omega) and its multi-parametric representation rho_q.

Elements of B_k(omega) are formal rational combinations of words in the
generators sigma_a and eps_a (a = 1..k-1); no normal form modulo the
defining relations is attempted. Identities are checked after mapping to
operators with ``rho_q: sigma_a -> -P_q^{(a,a+1)}, eps_a -> -Q_q^{(a,a+1)}``,
which represents B_k(-2r) on V^{⊗k}, dim V = 2r.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Sequence, Tuple

from .exact import as_rational, format_rational, gen_binom
from .params import ParameterFamily, invert
from .sparse import (
    SparseOp,
    embed_two_site,
    first_difference,
    swap_sites,
    symplectic_basis,
    trace,
    transpose,
)
from .symmetric import Permutation, p_op, pairing_type_a

Word = Tuple[Tuple[str, int], ...]

#: largest degree for which the symmetrizers are expanded as formal elements
FORMAL_KMAX = 4


class ParameterMismatchError(ValueError):
    pass


class SymmetrizerUndefinedError(ZeroDivisionError):
    pass


class PairingUndefinedError(ValueError):
    pass


class InvalidFormError(ValueError):
    pass


# ---------------------------------------------------------------------------
# formal elements


class BrauerElement:
    """A formal combination ``sum coeff * word`` in B_k(omega)."""

    __slots__ = ("omega", "k", "terms")

    def __init__(self, omega, k: int, terms: Dict[Word, Fraction] = None):
        self.omega = as_rational(omega)
        self.k = k
        self.terms = {w: Fraction(c) for w, c in (terms or {}).items() if c}
        for w in self.terms:
            for kind, a in w:
                if kind not in ("s", "e") or not 1 <= a <= k - 1:
                    raise ValueError(f"generator {kind}_{a} is not in B_{k}")

    @classmethod
    def one(cls, omega, k: int) -> "BrauerElement":
        return cls(omega, k, {(): Fraction(1)})

    @classmethod
    def gen(cls, kind: str, a: int, omega, k: int) -> "BrauerElement":
        return cls(omega, k, {((kind, a),): Fraction(1)})

    @classmethod
    def word(cls, word, omega, k: int, coeff=1) -> "BrauerElement":
        return cls(omega, k, {tuple(word): as_rational(coeff)})

    def _like(self, terms) -> "BrauerElement":
        return BrauerElement(self.omega, self.k, terms)

    def _check(self, other: "BrauerElement"):
        if self.omega != other.omega or self.k != other.k:
            raise ParameterMismatchError("elements of different Brauer algebras")

    def _coerce(self, other):
        if isinstance(other, BrauerElement):
            self._check(other)
            return other
        return BrauerElement(self.omega, self.k, {(): as_rational(other)})

    def __add__(self, other) -> "BrauerElement":
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> "BrauerElement":
        return self._like({w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "BrauerElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "BrauerElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "BrauerElement":
        if not isinstance(other, BrauerElement):
            c = as_rational(other)
            return self._like({w: v * c for w, v in self.terms.items()})
        self._check(other)
        out: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return self._like(out)

    def __rmul__(self, c) -> "BrauerElement":
        c = as_rational(c)
        return self._like({w: v * c for w, v in self.terms.items()})

    def __truediv__(self, c) -> "BrauerElement":
        return self * (1 / as_rational(c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BrauerElement):
            return NotImplemented
        return self.omega == other.omega and self.k == other.k and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self):
        return f"BrauerElement(omega={self.omega}, k={self.k}, terms={len(self.terms)})"

    def inverse_word_element(self) -> "BrauerElement":
        """Reverse every word; the inverse for a single product of sigma's."""
        return self._like({w[::-1]: c for w, c in self.terms.items()})


def augmentation(elem: BrauerElement) -> Fraction:
    """The character sigma_a -> 1, eps_a -> 0, extended linearly."""
    return sum(
        (c for w, c in elem.terms.items() if all(kind == "s" for kind, _ in w)),
        Fraction(0),
    )


def perm_element(sigma: Sequence[int], omega) -> BrauerElement:
    sigma = Permutation(sigma)
    word = tuple(("s", a) for a in sigma.adjacent_word())
    return BrauerElement.word(word, omega, sigma.degree)


def _tau_word(a: int, b: int) -> Word:
    """tau_ab = sigma_a sigma_{a+1} ... sigma_{b-1}; empty for a = b."""
    if a > b:
        raise ValueError("tau_ab needs a <= b")
    return tuple(("s", c) for c in range(a, b))


def _conj_word(kind: str, a: int, b: int) -> Word:
    if a == b:
        raise ValueError("sigma_ab / eps_ab need a != b")
    a, b = min(a, b), max(a, b)
    tau = _tau_word(a, b - 1)
    return tau + ((kind, b - 1),) + tau[::-1]


def brauer_generators(kind: str, indices, k: int, omega) -> BrauerElement:
    """Named elements of B_k(omega).

    kind is one of ``sigma_ab``, ``eps_ab``, ``tau_ab`` (indices (a, b)),
    ``y_b`` (index b) or ``v_a`` (index a).
    """
    omega = as_rational(omega)
    if isinstance(indices, int):
        indices = (indices,)
    if kind in ("sigma_ab", "eps_ab"):
        a, b = indices
        if not (1 <= a <= k and 1 <= b <= k):
            raise ValueError("indices out of range")
        return BrauerElement.word(_conj_word(kind[0] if kind == "sigma_ab" else "e", a, b), omega, k)
    if kind == "tau_ab":
        a, b = indices
        if not 1 <= a <= b <= k:
            raise ValueError("tau_ab needs 1 <= a <= b <= k")
        return BrauerElement.word(_tau_word(a, b), omega, k)
    if kind == "y_b":
        (b,) = indices
        if not 2 <= b <= k:
            raise ValueError("y_b needs 2 <= b <= k")
        out = BrauerElement(omega, k)
        for a in range(1, b):
            out = out + BrauerElement.word(_conj_word("s", a, b), omega, k)
            out = out - BrauerElement.word(_conj_word("e", a, b), omega, k)
        return out
    if kind == "v_a":
        (a,) = indices
        if not omega:
            raise ZeroDivisionError("v_a is undefined at omega = 0")
        s = BrauerElement.gen("s", a, omega, k)
        e = BrauerElement.gen("e", a, omega, k)
        return (1 + s) / 2 - e / omega
    raise ValueError(f"unknown generator kind {kind!r}")


def check_symmetrizer_defined(k: int, omega) -> None:
    omega = as_rational(omega)
    for b in range(2, k + 1):
        if 2 * b + omega - 4 == 0:
            raise SymmetrizerUndefinedError(
                f"s_({k}) is undefined at omega={omega}: denominator 2b+omega-4 vanishes at b={b}"
            )


def _product_factor_coeffs(b: int, omega: Fraction):
    """(shift, denominator) of the factor (y_b+1)(y_b+shift)/denominator."""
    return omega + b - 3, 2 * b + omega - 4


def symmetrizer_product(k: int, omega) -> BrauerElement:
    """s_(k) = (1/k!) prod_{b=2..k} (y_b+1)(y_b+omega+b-3)/(2b+omega-4), expanded."""
    omega = as_rational(omega)
    check_symmetrizer_defined(k, omega)
    if k > FORMAL_KMAX:
        raise ValueError(f"formal expansion is limited to k <= {FORMAL_KMAX}; use symmetrizer_image")
    out = BrauerElement.one(omega, k)
    for b in range(2, k + 1):
        y = brauer_generators("y_b", b, k, omega)
        shift, den = _product_factor_coeffs(b, omega)
        out = out * ((y + 1) * (y + shift)) / den
    return out / factorial(k)


def pair_matchings(k: int, t: int) -> List[Tuple[Tuple[int, int], ...]]:
    """All sets of t pairwise disjoint pairs (a < b) in {1..k}, each listed once.

    Pairs inside a set are sorted by their first element.
    """
    out = []

    def rec(avail, left, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for idx, a in enumerate(avail):
            rest = avail[idx + 1:]
            for b in rest:
                remaining = [x for x in rest if x != b]
                rec(remaining, left - 1, acc + [(a, b)])

    rec(list(range(1, k + 1)), t, [])
    return out


def symmetrizer_sum_coeff(k: int, t: int, omega) -> Fraction:
    """(-1)^t / (2^t t!) / C(omega/2 + k - 2, t), the weight of one set of t pairs."""
    omega = as_rational(omega)
    binom = gen_binom(omega / 2 + k - 2, t)
    if binom == 0:
        raise SymmetrizerUndefinedError(
            f"s_({k}) sum form is undefined at omega={omega}: C(omega/2+k-2, {t}) = 0"
        )
    return Fraction((-1) ** t, 2 ** t * factorial(t)) / binom


def _sum_terms(k: int, omega) -> Iterator[Tuple[Fraction, Tuple[Tuple[int, int], ...]]]:
    for t in range(k // 2 + 1):
        weight = symmetrizer_sum_coeff(k, t, omega)
        for matching in pair_matchings(k, t):
            yield weight, matching


def symmetrizer_sum(k: int, omega) -> BrauerElement:
    """s_(k) = h_(k) sum_t (-1)^t/(2^t t!) C(omega/2+k-2, t)^{-1} sum eps_{a1 b1}...eps_{at bt}.

    The inner sum runs over sets of t non-intersecting pairs, each set once;
    an ordered-tuple reading over-counts the t >= 2 terms by t! and breaks
    agreement with the product formula at k = 4.
    """
    omega = as_rational(omega)
    if k > FORMAL_KMAX:
        raise ValueError(f"formal expansion is limited to k <= {FORMAL_KMAX}; use symmetrizer_image")
    inner = BrauerElement(omega, k)
    for weight, matching in _sum_terms(k, omega):
        word: Word = ()
        for a, b in matching:
            word += _conj_word("e", a, b)
        inner = inner + BrauerElement.word(word, omega, k, weight)
    return h_element(k, omega) * inner


def h_element(k: int, omega) -> BrauerElement:
    """h_(k) = (1/k!) sum over S_k."""
    out = BrauerElement(omega, k)
    for sigma in Permutation.all(k):
        out = out + perm_element(sigma, omega)
    return out / factorial(k)


def symmetrizer_trace(k: int, omega) -> Fraction:
    """(omega+2k-2)/(omega+k-2) * C(omega+k-2, k)."""
    omega = as_rational(omega)
    return (omega + 2 * k - 2) / (omega + k - 2) * gen_binom(omega + k - 2, k)


# ---------------------------------------------------------------------------
# operators


def q_op(q: ParameterFamily) -> SparseOp:
    """Q_q: e_j ⊗ e_{-j} -> sum_i eps_i eps_j q_i/q_j e_i ⊗ e_{-i}."""
    basis = q.basis
    n = len(basis)
    digit = {x: d for d, x in enumerate(basis)}
    sgn = {x: (1 if x > 0 else -1) for x in basis}
    cols = {}
    for j in basis:
        col = {}
        for i in basis:
            col[digit[i] * n + digit[-i]] = sgn[i] * sgn[j] * q.q[i] / q.q[j]
        cols[digit[j] * n + digit[-j]] = col
    return SparseOp(basis, 2, cols, _trusted=True)


@dataclass(frozen=True)
class SymplecticForm:
    """An invertible antisymmetric matrix Omega on the symplectic basis of rank r."""

    r: int
    omega: Dict[Tuple[int, int], Fraction] = field(repr=False)

    def __post_init__(self):
        basis = symplectic_basis(self.r)
        for i in basis:
            for j in basis:
                if self.entry(i, j) != -self.entry(j, i):
                    raise InvalidFormError("form is not antisymmetric")
        if self.inverse() is None:
            raise InvalidFormError("form is singular")

    @classmethod
    def canonical(cls, r: int) -> "SymplecticForm":
        return cls(r, {(i, -i): Fraction(1 if i > 0 else -1) for i in symplectic_basis(r)})

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.omega.get((i, j), 0))

    def inverse(self):
        """Exact inverse as a dict, or None if singular (Gauss-Jordan)."""
        basis = symplectic_basis(self.r)
        n = len(basis)
        M = [[self.entry(i, j) for j in basis] + [Fraction(int(a == b)) for b in range(n)]
             for a, i in enumerate(basis)]
        for c in range(n):
            piv = next((i for i in range(c, n) if M[i][c]), None)
            if piv is None:
                return None
            M[c], M[piv] = M[piv], M[c]
            inv = 1 / M[c][c]
            M[c] = [x * inv for x in M[c]]
            for i in range(n):
                if i != c and M[i][c]:
                    f = M[i][c]
                    M[i] = [x - f * y for x, y in zip(M[i], M[c])]
        return {(i, j): M[a][n + b] for a, i in enumerate(basis) for b, j in enumerate(basis)}


def random_symplectic_form(r: int, seed: int) -> SymplecticForm:
    rng = random.Random(seed)
    basis = symplectic_basis(r)
    while True:
        om = {}
        for a, i in enumerate(basis):
            for j in basis[a + 1:]:
                v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                om[i, j], om[j, i] = v, -v
        try:
            return SymplecticForm(r, om)
        except InvalidFormError:
            continue


def q_op_general(form: SymplecticForm) -> SparseOp:
    """Q = sum Omega^{ij} Omega_{ml} E_i^l ⊗ E_j^m with (Omega^{ij}) = Omega^{-1}."""
    inv = form.inverse()
    if inv is None:
        raise InvalidFormError("form is singular")
    basis = symplectic_basis(form.r)
    entries = {}
    for (i, j), up in inv.items():
        if not up:
            continue
        for l in basis:
            for m in basis:
                low = form.entry(m, l)
                if low:
                    entries[(i, j), (l, m)] = up * low
    return SparseOp.from_entries(basis, 2, entries)


def c_idempotent(q: ParameterFamily) -> SparseOp:
    """C_q = (1 - P_q)/2 - Q_q/(2r)."""
    P, Q = p_op(q), q_op(q)
    return (-P).add_identity(1) / 2 - Q / (2 * q.r)


class BrauerRep:
    """rho_q on B_k(-2r), with memoized images of the named elements.

    ``P`` and ``Q`` default to P_q and Q_q; passing other operators (for
    instance the general-form Q) reuses the same machinery.
    """

    def __init__(self, q: ParameterFamily, k: int, P: SparseOp = None, Q: SparseOp = None):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.q = q
        self.k = k
        self.r = q.r
        self.omega = Fraction(-2 * q.r)
        self.basis = q.basis
        self.P = P if P is not None else p_op(q)
        self.Q = Q if Q is not None else q_op(q)
        self._gens = {}
        for a in range(1, k):
            self._gens["s", a] = -embed_two_site(self.P, a, a + 1, k)
            self._gens["e", a] = -embed_two_site(self.Q, a, a + 1, k)
        self._words: Dict[Word, SparseOp] = {}

    @property
    def one(self) -> SparseOp:
        return SparseOp.identity(self.basis, self.k)

    def gen(self, kind: str, a: int) -> SparseOp:
        return self._gens[kind, a]

    def word(self, word: Word) -> SparseOp:
        word = tuple(word)
        if not word:
            return self.one
        hit = self._words.get(word)
        if hit is None:
            hit = self.word(word[:-1]) @ self._gens[word[-1]]
            self._words[word] = hit
        return hit

    def __call__(self, elem: BrauerElement) -> SparseOp:
        if elem.k != self.k:
            raise ParameterMismatchError(f"element of B_{elem.k} evaluated on V^⊗{self.k}")
        if elem.omega != self.omega:
            raise ParameterMismatchError(
                f"rho_q represents B_k({self.omega}), element has omega={elem.omega}"
            )
        out = SparseOp.zero(self.basis, self.k)
        for w, c in elem.terms.items():
            out = out + self.word(w) * c
        return out

    def sigma_ab(self, a: int, b: int) -> SparseOp:
        return self.word(_conj_word("s", a, b))

    def eps_ab(self, a: int, b: int) -> SparseOp:
        return self.word(_conj_word("e", a, b))

    def perm(self, sigma: Sequence[int]) -> SparseOp:
        return self.word(tuple(("s", a) for a in Permutation(sigma).adjacent_word()))

    def h(self) -> SparseOp:
        """rho_q(h_(k)), which equals the type-A operator A_(k)."""
        return pairing_type_a(self.q, self.k, "A") if self.P == p_op(self.q) else self._h_direct()

    def _h_direct(self) -> SparseOp:
        total = SparseOp.zero(self.basis, self.k)
        for sigma in Permutation.all(self.k):
            total = total + self.perm(sigma)
        return total / factorial(self.k)

    def y(self, b: int) -> SparseOp:
        out = SparseOp.zero(self.basis, self.k)
        for a in range(1, b):
            out = out + self.sigma_ab(a, b) - self.eps_ab(a, b)
        return out

    def symmetrizer_product(self) -> SparseOp:
        """rho_q(s_(k)) by the product formula, one factor at a time."""
        k = self.k
        check_symmetrizer_defined(k, self.omega)
        out = self.one
        for b in range(2, k + 1):
            Y = self.y(b)
            shift, den = _product_factor_coeffs(b, self.omega)
            out = out @ (Y.add_identity(1) @ Y.add_identity(shift)) / den
        return out / factorial(k)

    def symmetrizer_sum(self) -> SparseOp:
        """rho_q(s_(k)) by the contraction-sum formula."""
        inner = SparseOp.zero(self.basis, self.k)
        for weight, matching in _sum_terms(self.k, self.omega):
            op = self.one
            for a, b in matching:
                op = op @ self.eps_ab(a, b)
            inner = inner + op * weight
        return self.h() @ inner


def rho(q: ParameterFamily, elem: BrauerElement, k: int) -> SparseOp:
    if elem.k != k:
        raise ParameterMismatchError("element degree differs from k")
    return BrauerRep(q, k)(elem)


def symmetrizer_image(q: ParameterFamily, k: int, form: str = "product") -> SparseOp:
    rep = BrauerRep(q, k)
    if form == "product":
        return rep.symmetrizer_product()
    if form == "sum":
        return rep.symmetrizer_sum()
    raise ValueError("form must be 'product' or 'sum'")


def pairing_type_c(q: ParameterFamily, k: int) -> SparseOp:
    """C_{q,(k)} = rho_q(s_(k)); identity for k = 1, defined for k <= r+1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return SparseOp.identity(q.basis, 1)
    if k >= q.r + 2:
        raise PairingUndefinedError(
            f"C_(q,{k}) is undefined for r={q.r}: k must be <= r+1 "
            f"(omega=-2r hits a vanishing denominator 2b+omega-4 at b=r+2)"
        )
    return BrauerRep(q, k).symmetrizer_product()


def trace_h_eps(q: ParameterFamily, k: int, t: int) -> Fraction:
    """tr rho_q(h_(k) eps_12 eps_34 ... eps_{2t-1,2t})."""
    if not 0 <= 2 * t <= k:
        raise ValueError("need 0 <= 2t <= k")
    rep = BrauerRep(q, k)
    op = rep.h()
    for p in range(1, t + 1):
        op = op @ rep.gen("e", 2 * p - 1)
    return trace(op)


# ---------------------------------------------------------------------------
# relation verification


def _relations(k: int):
    """Named relations of B_k(omega), each with its list of (lhs, rhs) instances.

    A side is a list of generators; "omega" stands for the scalar and ()
    for the empty word.
    """
    S = lambda a: ("s", a)  # noqa: E731
    E = lambda a: ("e", a)  # noqa: E731
    rng = range(1, k)
    far = [(a, b) for a in rng for b in rng if abs(a - b) > 1]
    near = range(1, k - 1)
    return [
        ("local.sigma_a^2=1", [([S(a), S(a)], [()]) for a in rng]),
        ("local.eps_a^2=omega*eps_a", [([E(a), E(a)], ["omega", E(a)]) for a in rng]),
        ("local.sigma_a*eps_a=eps_a", [([S(a), E(a)], [E(a)]) for a in rng]),
        ("local.eps_a*sigma_a=eps_a", [([E(a), S(a)], [E(a)]) for a in rng]),
        ("distant.sigma_a*sigma_b=sigma_b*sigma_a", [([S(a), S(b)], [S(b), S(a)]) for a, b in far]),
        ("distant.eps_a*eps_b=eps_b*eps_a", [([E(a), E(b)], [E(b), E(a)]) for a, b in far]),
        ("distant.sigma_a*eps_b=eps_b*sigma_a", [([S(a), E(b)], [E(b), S(a)]) for a, b in far]),
        ("adjacent.braid", [([S(a), S(a + 1), S(a)], [S(a + 1), S(a), S(a + 1)]) for a in near]),
        ("adjacent.eps_a*eps_a+1*eps_a=eps_a", [([E(a), E(a + 1), E(a)], [E(a)]) for a in near]),
        ("adjacent.eps_a+1*eps_a*eps_a+1=eps_a+1", [([E(a + 1), E(a), E(a + 1)], [E(a + 1)]) for a in near]),
        ("adjacent.sigma_a*eps_a+1*eps_a=sigma_a+1*eps_a",
         [([S(a), E(a + 1), E(a)], [S(a + 1), E(a)]) for a in near]),
        ("adjacent.eps_a+1*eps_a*sigma_a+1=eps_a+1*sigma_a",
         [([E(a + 1), E(a), S(a + 1)], [E(a + 1), S(a)]) for a in near]),
        ("derived.eps_a*sigma_a+1*eps_a=eps_a", [([E(a), S(a + 1), E(a)], [E(a)]) for a in near]),
        ("derived.sigma_a+1*eps_a*eps_a+1=sigma_a*eps_a+1",
         [([S(a + 1), E(a), E(a + 1)], [S(a), E(a + 1)]) for a in near]),
        ("derived.eps_a*eps_a+1*sigma_a=eps_a*sigma_a+1",
         [([E(a), E(a + 1), S(a)], [E(a), S(a + 1)]) for a in near]),
    ]


RELATION_NAMES = [name for name, _ in _relations(3)]


def _eval_side(rep: BrauerRep, side) -> SparseOp:
    coeff = Fraction(1)
    word = []
    for item in side:
        if item == "omega":
            coeff *= rep.omega
        elif item == ():
            continue
        else:
            word.append(item)
    return rep.word(tuple(word)) * coeff


def _status(name: str, lhs: SparseOp, rhs: SparseOp) -> dict:
    diff = first_difference(lhs, rhs)
    if diff is None:
        return {"relation": name, "status": "pass", "witness": None}
    row, col, v = diff
    return {"relation": name, "status": "fail", "witness": [list(row), list(col), _fmt(v)]}


def _fmt(v: Fraction) -> str:
    return format_rational(v)


def verify_brauer_relations(q: ParameterFamily, k: int) -> List[dict]:
    """Evaluate every defining relation and the auxiliary identities under rho_q.

    Returns one ``{"relation", "status", "witness"}`` record per relation;
    a relation passes iff all of its instances hold exactly. The witness of a
    failure is (row, col, lhs-rhs value) of the first offending instance.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    rep = BrauerRep(q, k)
    report = []
    for name, instances in _relations(k):
        record = {"relation": name, "status": "pass", "witness": None}
        for lhs, rhs in instances:
            record = _status(name, _eval_side(rep, lhs), _eval_side(rep, rhs))
            if record["status"] == "fail":
                break
        report.append(record)
    report.extend(verify_auxiliary_identities(q))
    return report


def verify_auxiliary_identities(q: ParameterFamily) -> List[dict]:
    """Q^2 = 2rQ, PQ = QP = -Q, the two three-site identities, and the q' dualities."""
    P, Q = p_op(q), q_op(q)
    qi = invert(q)
    Pi, Qi = p_op(qi), q_op(qi)
    r = q.r
    P12, P23 = embed_two_site(P, 1, 2, 3), embed_two_site(P, 2, 3, 3)
    Q12, Q23 = embed_two_site(Q, 1, 2, 3), embed_two_site(Q, 2, 3, 3)
    return [
        _status("Q^2=2rQ", Q @ Q, Q * (2 * r)),
        _status("PQ=-Q", P @ Q, -Q),
        _status("QP=-Q", Q @ P, -Q),
        _status("three_site.Q12*Q23*Q12=Q12", Q12 @ Q23 @ Q12, Q12),
        _status("three_site.P12*Q23*Q12=-P23*Q12", P12 @ Q23 @ Q12, -(P23 @ Q12)),
        _status("flip.P_q'=P_q^(21)", Pi, swap_sites(P)),
        _status("flip.Q_q'=Q_q^(21)", Qi, swap_sites(Q)),
        _status("transpose.P_q^T=P_q'", transpose(P), Pi),
        _status("transpose.Q_q^T=Q_q'", transpose(Q), Qi),
    ]
