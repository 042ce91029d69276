"""Command-line front end: ``qbrauer {dims,verify,minors,export,sample}``.

Exit codes: 0 success, 1 verification failure, 2 usage or resource error.
All output is deterministic for a given command line.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List

from .brauer import (
    BrauerRep,
    PairingUndefinedError,
    c_idempotent,
    pairing_type_c,
    q_op,
    trace_h_eps,
    verify_brauer_relations,
)
from .exact import format_rational
from .linalg import colspace_contained
from .manin import (
    InvalidInputError,
    TruncationError,
    example_matrices,
    identity_matrix,
    minor_a,
    minor_s,
)
from .params import ConstraintError, ParameterFamily, invert, load_family, non_deformed, sample, sample_type_a
from .quadratic import ResourceLimitError, dimension_csv, family_dimension_rows
from .sparse import embed_two_site, first_difference, transpose
from .symmetric import p_op, pairing_type_a

MAX_R = 4


class UsageError(Exception):
    pass


def _check(name, lhs, rhs) -> dict:
    diff = first_difference(lhs, rhs)
    if diff is None:
        return {"relation": name, "status": "pass", "witness": None}
    row, col, v = diff
    return {"relation": name, "status": "fail", "witness": [list(row), list(col), format_rational(v)]}


def _bool_check(name, ok: bool) -> dict:
    return {"relation": name, "status": "pass" if ok else "fail", "witness": None}


def verify_family(q: ParameterFamily, k: int) -> List[dict]:
    """The full identity suite for one family up to tensor degree k."""
    if k < 2:
        raise UsageError("verify needs k >= 2")
    checks = verify_brauer_relations(q, k)
    P, Q = p_op(q), q_op(q)
    P12, P23 = embed_two_site(P, 1, 2, 3), embed_two_site(P, 2, 3, 3)
    checks.append(_check("braid.P12*P23*P12=P23*P12*P23", P12 @ P23 @ P12, P23 @ P12 @ P23))

    C = c_idempotent(q)
    checks.append(_check("C_q^2=C_q", C @ C, C))
    checks.append(_check("Q*C_q=0", Q @ C, C * 0))
    checks.append(_check("C_q*Q=0", C @ Q, C * 0))
    checks.append(_check("transpose(C_q)=C_q'", transpose(C), c_idempotent(invert(q))))
    one_minus_c = (-C).add_identity(1)
    one_plus_p = P.add_identity(1)
    checks.append(_bool_check("colspace(1-C_q)=colspace(1+P_q)+colspace(Q_q)",
                              colspace_contained(one_minus_c, [one_plus_p, Q])
                              and colspace_contained(one_plus_p, [one_minus_c])
                              and colspace_contained(Q, [one_minus_c])))
    tc, tp, tq = transpose(one_minus_c), transpose(one_plus_p), transpose(Q)
    checks.append(_bool_check("rowspace(1-C_q)=rowspace(1+P_q)+rowspace(Q_q)",
                              colspace_contained(tc, [tp, tq])
                              and colspace_contained(tp, [tc])
                              and colspace_contained(tq, [tc])))

    for kk in range(2, min(k, q.r + 1) + 1):
        rep = BrauerRep(q, kk)
        S = rep.symmetrizer_product()
        checks.append(_check(f"symmetrizer.product=sum[k={kk}]", S, rep.symmetrizer_sum()))
        checks.append(_check(f"symmetrizer.idempotent[k={kk}]", S @ S, S))
        zero = S * 0
        sig = [_check(f"absorb[k={kk}]", rep.gen("s", a) @ S, S) for a in range(1, kk)]
        sig += [_check(f"absorb[k={kk}]", S @ rep.gen("s", a), S) for a in range(1, kk)]
        sig += [_check(f"absorb[k={kk}]", rep.gen("e", a) @ S, zero) for a in range(1, kk)]
        sig += [_check(f"absorb[k={kk}]", S @ rep.gen("e", a), zero) for a in range(1, kk)]
        checks.append(next((c for c in sig if c["status"] == "fail"), sig[0]))

    ref = non_deformed(q.r)
    for t in range(0, k // 2 + 1):
        a, b = trace_h_eps(q, k, t), trace_h_eps(ref, k, t)
        rec = _bool_check(f"trace_h_eps.q_independent[k={k},t={t}]", a == b)
        if a != b:
            rec["witness"] = [str(a), str(b)]
        checks.append(rec)
    return checks


# ---------------------------------------------------------------------------
# commands


def _seeds(text: str) -> List[int]:
    try:
        seeds = sorted({int(s) for s in text.split(",") if s.strip()})
    except ValueError:
        raise UsageError(f"bad seed list {text!r}") from None
    if not seeds:
        raise UsageError("at least one seed is required")
    return seeds


def _read_params(path: str, strict: bool = True):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read parameter file: {exc}") from None
    return load_family(data, strict=strict)


def _families(args):
    """[(seed or None, family)] from --params or --r/--seeds."""
    if args.params:
        return [(None, _read_params(args.params))]
    if args.r is None:
        raise UsageError("--r or --params is required")
    if args.r < 1:
        raise UsageError("--r must be >= 1")
    return [(seed, sample(args.r, seed)) for seed in _seeds(args.seeds)]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_dims(args) -> tuple:
    fams = _families(args)
    r = fams[0][1].r
    kmax = args.kmax if args.kmax is not None else (args.k if args.k is not None else r + 1)
    if r > MAX_R or kmax > r + 1 or kmax < 1:
        raise ResourceLimitError(f"dims supports r <= {MAX_R} and 1 <= kmax <= r+1 (got r={r}, kmax={kmax})")
    rows = []
    for seed, q in fams:
        rows.extend(family_dimension_rows(q, kmax, seed))
    ok = all(row["agree"] for row in rows)
    text = dimension_csv(rows) if args.format == "csv" else _dump(rows)
    return (0 if ok else 1), text


def cmd_verify(args) -> tuple:
    k = args.k if args.k is not None else 3
    if args.params:
        raw, problems = _read_params(args.params, strict=False)
        fams = [(None, raw, problems)]
    else:
        fams = [(seed, q, []) for seed, q in _families(args)]
    results = []
    ok = True
    for seed, q, problems in fams:
        checks = verify_family(q, k)
        entry = {
            "seed": seed,
            "r": q.r,
            "k": k,
            "params": q.to_json(),
            "constraint_violations": [name for name, _ in problems],
            "C_q_zero": c_idempotent(q).is_zero(),
            "checks": checks,
        }
        entry["all_pass"] = all(c["status"] == "pass" for c in checks)
        ok = ok and entry["all_pass"]
        results.append(entry)
    return (0 if ok else 1), _dump({"all_pass": ok, "results": results})


def _minor_matrix(args, q: ParameterFamily, seed: int):
    k = args.k if args.k is not None else 2
    kind = args.kind
    if kind == "identity":
        M = identity_matrix(q.basis)
    elif kind == "central_scalar":
        M = example_matrices("central_scalar", {"basis": q.basis, "dmax": k})
    elif kind == "symplectic_elementary":
        M = example_matrices("symplectic_elementary", {"r": q.r, "v": {1: 1, -1: 1}, "c": 1})
    else:
        if k < 2:
            raise UsageError("universal minors need k >= 2")
        ptilde = sample_type_a(args.ptilde_dim, seed) if args.ptilde_dim else None
        M = example_matrices("universal", {"q": q, "ptilde": ptilde, "dmax": k})
    if args.type == "A":
        return minor_a(M, q, k), k
    if kind == "universal":
        if not args.ptilde_dim:
            raise UsageError("S-minors of the universal matrix need --ptilde-dim")
        S = pairing_type_a(sample_type_a(args.ptilde_dim, seed), k, "S")
    else:
        S = pairing_type_a(q, k, "S")
    return minor_s(M, S), k


def cmd_minors(args) -> tuple:
    seed, q = _families(args)[0]
    minor, k = _minor_matrix(args, q, seed if seed is not None else 1)
    out = {
        "kind": args.kind,
        "type": args.type,
        "k": k,
        "seed": seed,
        "params": q.to_json(),
        "zero": minor.is_zero(),
        "minor": minor.to_json(),
    }
    return 0, _dump(out)


def cmd_export(args) -> tuple:
    seed, q = _families(args)[0]
    k = args.k if args.k is not None else 2
    op = args.op
    if op == "P":
        T = p_op(q)
    elif op == "Q":
        T = q_op(q)
    elif op == "C":
        T = c_idempotent(q)
    elif op == "pairing":
        T = pairing_type_c(q, k)
    else:
        T = pairing_type_a(q, k, op)
    return 0, _dump({"op": op, "seed": seed, "params": q.to_json(), "operator": T.to_json()})


def cmd_sample(args) -> tuple:
    fams = _families(args)
    return 0, _dump([{"seed": seed, **q.to_json()} for seed, q in fams])


COMMANDS = {
    "dims": cmd_dims,
    "verify": cmd_verify,
    "minors": cmd_minors,
    "export": cmd_export,
    "sample": cmd_sample,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qbrauer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--r", type=int)
        p.add_argument("--seeds", default="1")
        p.add_argument("--params", help="JSON parameter file")
        p.add_argument("--output", help="write to PATH instead of stdout")
        return p

    p = common(sub.add_parser("dims", help="dimension table"))
    p.add_argument("--kmax", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = common(sub.add_parser("verify", help="run the identity suite"))
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["json"], default="json")

    p = common(sub.add_parser("minors", help="S- or A-minors of an example matrix"))
    p.add_argument("--k", type=int)
    p.add_argument("--kind", choices=["identity", "central_scalar", "symplectic_elementary", "universal"],
                   default="identity")
    p.add_argument("--type", choices=["S", "A"], default="A")
    p.add_argument("--ptilde-dim", type=int, dest="ptilde_dim")
    p.add_argument("--format", choices=["json"], default="json")

    p = common(sub.add_parser("export", help="export an operator as JSON"))
    p.add_argument("--op", choices=["P", "Q", "C", "pairing", "S", "A"], default="C")
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=["json"], default="json")

    p = common(sub.add_parser("sample", help="print sampled parameter families"))
    p.add_argument("--format", choices=["json"], default="json")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = COMMANDS[args.command](args)
    except (UsageError, ResourceLimitError, PairingUndefinedError, ConstraintError,
            InvalidInputError, TruncationError, ValueError) as exc:
        print(f"qbrauer {args.command}: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
