"""Deformation parameters: the constrained family q = (q_ij, q_i) and type-A matrices.

A :class:`ParameterFamily` of rank r carries a nonzero rational q_i for every
label i in {-r..-1, 1..r} and a nonzero rational q_ij for every pair of
labels, subject to

* ``qpm``:  q_ij q_ji = 1 and q_ii = 1,
* ``vecq``: q_{-i} = 1/q_i and q_{-i,j} = q_j^2 / q_ij.

It is determined by the r values q_1..q_r and the r(r-1)/2 values q_ij with
1 <= i < j <= r; :func:`build_family` performs that extension.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple

from .exact import as_rational, format_rational
from .sparse import plain_basis, symplectic_basis


class InvalidParameterError(ValueError):
    pass


class ArityError(ValueError):
    pass


class ConstraintError(ValueError):
    """A parameter constraint is violated; ``constraint`` is "qpm" or "vecq"."""

    def __init__(self, constraint: str, detail: str):
        super().__init__(f"{constraint}: {detail}")
        self.constraint = constraint
        self.detail = detail


@dataclass(frozen=True, eq=True)
class ParameterFamily:
    r: int
    q: Dict[int, Fraction] = field(repr=False)
    qij: Dict[Tuple[int, int], Fraction] = field(repr=False)
    _checked: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if self._checked:
            problems = self.violations()
            if problems:
                raise ConstraintError(*problems[0])

    @classmethod
    def unchecked(cls, r: int, q, qij) -> "ParameterFamily":
        """Bypass the constraints. Only for negative controls."""
        return cls(r, dict(q), dict(qij), _checked=False)

    @property
    def basis(self) -> Tuple[int, ...]:
        return symplectic_basis(self.r)

    def pair(self, i: int, j: int) -> Fraction:
        return self.qij[i, j]

    def free_parameters(self):
        """The independent values (q_1..q_r, {(i,j): q_ij for 1<=i<j<=r})."""
        qs = [self.q[i] for i in range(1, self.r + 1)]
        pairs = {(i, j): self.qij[i, j] for i, j in itertools.combinations(range(1, self.r + 1), 2)}
        return qs, pairs

    def violations(self):
        """List of (constraint, detail) for every violated constraint."""
        out = []
        basis = self.basis
        if set(self.q) != set(basis) or set(self.qij) != set(itertools.product(basis, repeat=2)):
            out.append(("qpm", "parameter maps do not cover every index"))
            return out
        for x in itertools.chain(self.q.values(), self.qij.values()):
            if not x:
                out.append(("qpm", "zero parameter"))
                return out
        for i in basis:
            if self.qij[i, i] != 1:
                out.append(("qpm", f"q_{{{i},{i}}} != 1"))
            for j in basis:
                if self.qij[i, j] * self.qij[j, i] != 1:
                    out.append(("qpm", f"q_{{{i},{j}}} q_{{{j},{i}}} != 1"))
        for i in basis:
            if self.q[-i] * self.q[i] != 1:
                out.append(("vecq", f"q_{{{-i}}} != 1/q_{{{i}}}"))
            for j in basis:
                if self.qij[-i, j] * self.qij[i, j] != self.q[j] ** 2:
                    out.append(("vecq", f"q_{{{-i},{j}}} q_{{{i},{j}}} != q_{{{j}}}^2"))
        return out

    def sign_flipped(self) -> "ParameterFamily":
        """The family with every q_i replaced by -q_i (same q_ij)."""
        return ParameterFamily(self.r, {i: -v for i, v in self.q.items()}, dict(self.qij))

    def to_json(self) -> dict:
        qs, pairs = self.free_parameters()
        return {
            "r": self.r,
            "q": [format_rational(x) for x in qs],
            "qij": {f"{i},{j}": format_rational(v) for (i, j), v in sorted(pairs.items())},
        }


def build_family(r: int, free_q: Sequence, free_qij: Mapping = None) -> ParameterFamily:
    if r < 1:
        raise InvalidParameterError("rank r must be >= 1")
    free_q = [as_rational(x) for x in free_q]
    if len(free_q) != r:
        raise ArityError(f"expected {r} values q_1..q_r, got {len(free_q)}")
    pairs = {}
    for key, v in (free_qij or {}).items():
        i, j = _pair_key(key)
        if not 1 <= i < j <= r:
            raise ArityError(f"pair ({i},{j}) is not of the form 1 <= i < j <= {r}")
        pairs[i, j] = as_rational(v)
    if len(pairs) != r * (r - 1) // 2:
        raise ArityError(f"expected {r * (r - 1) // 2} pair values q_ij, got {len(pairs)}")
    if any(not x for x in free_q) or any(not x for x in pairs.values()):
        raise InvalidParameterError("parameters must be nonzero")

    qpos = {i: free_q[i - 1] for i in range(1, r + 1)}

    def base(a, b):
        if a == b:
            return Fraction(1)
        return pairs[a, b] if a < b else 1 / pairs[b, a]

    q = {}
    for a in range(1, r + 1):
        q[a] = qpos[a]
        q[-a] = 1 / qpos[a]
    qij = {}
    for a in range(1, r + 1):
        for b in range(1, r + 1):
            p = base(a, b)
            qa2, qb2 = qpos[a] ** 2, qpos[b] ** 2
            qij[a, b] = p
            qij[-a, b] = qb2 / p
            qij[a, -b] = 1 / (p * qa2)
            qij[-a, -b] = p * qa2 / qb2
    return ParameterFamily(r, q, qij)


def _pair_key(key) -> Tuple[int, int]:
    if isinstance(key, str):
        i, j = key.split(",")
        return int(i), int(j)
    i, j = key
    return int(i), int(j)


def non_deformed(r: int) -> ParameterFamily:
    return build_family(r, [1] * r, {p: 1 for p in itertools.combinations(range(1, r + 1), 2)})


def invert(q: ParameterFamily) -> ParameterFamily:
    """The family q' of reciprocal parameters."""
    return ParameterFamily(
        q.r,
        {i: 1 / v for i, v in q.q.items()},
        {ij: 1 / v for ij, v in q.qij.items()},
        _checked=q._checked,
    )


def _draw(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 97), rng.randint(1, 97))


def sample(r: int, seed: int) -> ParameterFamily:
    """Deterministic pseudo-random family; numerators and denominators in [1, 97]."""
    rng = random.Random(seed)
    free_q = [_draw(rng) for _ in range(r)]
    pairs = {p: _draw(rng) for p in itertools.combinations(range(1, r + 1), 2)}
    return build_family(r, free_q, pairs)


@dataclass(frozen=True, eq=True)
class TypeAParams:
    """An n x n parameter matrix p_ij on labels 1..n with p_ij p_ji = 1, p_ii = 1."""

    n: int
    p: Dict[Tuple[int, int], Fraction] = field(repr=False)

    def __post_init__(self):
        labels = self.basis
        if set(self.p) != set(itertools.product(labels, repeat=2)):
            raise ConstraintError("qpm", "parameter matrix does not cover every index pair")
        for i in labels:
            if self.p[i, i] != 1:
                raise ConstraintError("qpm", f"p_{{{i},{i}}} != 1")
            for j in labels:
                if self.p[i, j] * self.p[j, i] != 1:
                    raise ConstraintError("qpm", f"p_{{{i},{j}}} p_{{{j},{i}}} != 1")

    @property
    def basis(self) -> Tuple[int, ...]:
        return plain_basis(self.n)

    def pair(self, i: int, j: int) -> Fraction:
        return self.p[i, j]


def build_type_a(n: int, upper: Mapping = None) -> TypeAParams:
    """Type-A matrix from its strictly upper entries; missing entries default to 1."""
    upper = {_pair_key(k): as_rational(v) for k, v in (upper or {}).items()}
    p = {}
    for i in range(1, n + 1):
        p[i, i] = Fraction(1)
        for j in range(i + 1, n + 1):
            v = upper.get((i, j), Fraction(1))
            if not v:
                raise InvalidParameterError("parameters must be nonzero")
            p[i, j] = v
            p[j, i] = 1 / v
    return TypeAParams(n, p)


def sample_type_a(n: int, seed: int) -> TypeAParams:
    rng = random.Random(seed)
    return build_type_a(n, {p: _draw(rng) for p in itertools.combinations(range(1, n + 1), 2)})


def mu(I: Sequence[int], sigma: Sequence[int], q) -> Fraction:
    """Product of q_{i_s i_t} over s < t with sigma^{-1}(s) > sigma^{-1}(t).

    ``sigma`` is given by its images (sigma(1), ..., sigma(k)), 1-based.
    """
    k = len(sigma)
    if len(I) != k:
        raise ArityError("index tuple and permutation have different lengths")
    inv = [0] * k
    for pos, img in enumerate(sigma):
        inv[img - 1] = pos
    out = Fraction(1)
    for s in range(k):
        for t in range(s + 1, k):
            if inv[s] > inv[t]:
                out *= q.pair(I[s], I[t])
    return out


def load_family(data: Mapping, strict: bool = True):
    """Read the parameter-file format.

    ``{"r": int, "q": [...], "qij": {"i,j": ...}}`` gives the free parameters.
    The optional keys ``"q_full"`` (``{"i": value}``) and ``"qij_full"``
    (``{"i,j": value}``) override individual entries of the derived family;
    the result is validated and a violation raises :class:`ConstraintError`
    naming ``"qpm"`` or ``"vecq"``. With ``strict=False`` the unchecked family
    is returned together with the list of violations instead.
    """
    try:
        r = int(data["r"])
        fam = build_family(r, data["q"], data.get("qij", {}))
    except KeyError as exc:
        raise ArityError(f"parameter file is missing {exc}") from None
    overrides_q = {int(k): as_rational(v) for k, v in data.get("q_full", {}).items()}
    overrides_qij = {_pair_key(k): as_rational(v) for k, v in data.get("qij_full", {}).items()}
    if not overrides_q and not overrides_qij:
        return fam if strict else (fam, [])
    q = dict(fam.q)
    q.update(overrides_q)
    qij = dict(fam.qij)
    qij.update(overrides_qij)
    raw = ParameterFamily.unchecked(r, q, qij)
    problems = raw.violations()
    if strict:
        if problems:
            raise ConstraintError(*problems[0])
        return ParameterFamily(r, q, qij)
    return raw, problems
