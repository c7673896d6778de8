"""Command-line front end: parse argv, call the library, print one JSON text.

Every subcommand is a thin adapter; no counting or algebra happens here.
Exit status: 0 when the requested computation or checks succeed, 1 when a
verified identity reports a failure, 2 on unusable input, 3 when a size
guard refuses the computation (PEAKLAB_MAX_N raises the guards, --force
drops them).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exact import format_rational
from .groupalgebra import (
    CLASS_FAMILIES,
    STRUCTURE_FAMILIES,
    all_theorem_ids,
    class_sum,
    family_labels,
    idempotent_powers,
    idempotents,
    multiplicative_closure,
    span_rank,
    structure_constants,
    verify_identity,
)
from .limits import ResourceLimitError
from .orderpolys import (
    ORDER_POLY_KINDS,
    enriched_gf,
    identity_check_43,
    order_polynomial,
    peak_polynomial,
)
from .perms import descent_stat, peak_stat, signed_stat, validate_perm
from .qsym import delta_expansion


def _parse_perm(text: str) -> list[int]:
    t = text.strip()
    if not t.startswith("["):
        t = f"[{t}]"
    try:
        vals = json.loads(t)
    except json.JSONDecodeError as exc:
        raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None
    if not isinstance(vals, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in vals
    ):
        raise ValueError("permutation must be a list of integers")
    return vals


def _plain(obj):
    """Recursively rewrite library values as JSON-encodable ones."""
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "to_json"):
        return _plain(obj.to_json())
    return obj


def _poly_strings(poly) -> list[str]:
    return [format_rational(c) for c in poly.coeffs]


def _cmd_stats(args) -> tuple[int, dict]:
    perm = _parse_perm(args.perm)
    if args.signed:
        validate_perm(perm, signed=True)
        out = {"perm": perm, "n": len(perm), "signed": True}
        for key in ("descent", "cyclic_descent", "peak", "sign"):
            out[key] = signed_stat(perm, key).to_json()
    else:
        validate_perm(perm)
        out = {
            "perm": perm,
            "n": len(perm),
            "signed": False,
            "descent": descent_stat(perm, "linear").to_json(),
            "cyclic_descent": descent_stat(perm, "cyclic").to_json(),
        }
        for key in ("interior", "left", "right", "exterior"):
            out[f"peak_{key}"] = peak_stat(perm, key).to_json()
    return 0, out


def _cmd_order_poly(args) -> tuple[int, dict]:
    perm = _parse_perm(args.perm)
    poly = order_polynomial(perm, args.kind)
    out = {"kind": args.kind, "perm": perm, "poly": _poly_strings(poly)}
    if args.gf:
        out["gf"] = enriched_gf(perm, args.kind).to_json()
    return 0, out


def _cmd_idempotents(args) -> tuple[int, dict]:
    powers = idempotent_powers(args.n, args.family)
    elems = idempotents(args.n, args.family, force=args.force)
    return 0, {
        "family": args.family,
        "n": args.n,
        "group": STRUCTURE_FAMILIES[args.family][0],
        "idempotents": [
            {"power": p, "element": e.to_json()} for p, e in zip(powers, elems)
        ],
    }


def _cmd_verify(args) -> tuple[int, dict]:
    ids = all_theorem_ids() if args.all else [args.theorem]
    results = []
    failed = 0
    for tid in ids:
        res = verify_identity(args.n, tid, force=args.force, sample=args.sample)
        if not res["ok"]:
            failed += 1
        results.append(_plain(res))
    return (1 if failed else 0), {
        "n": args.n,
        "checked": len(ids),
        "failed": failed,
        "results": results,
    }


def _label_json(family: str, label):
    if family == "B_peak_sign_set":
        sign, peaks = label
        return {"sign": sign, "peaks": list(peaks)}
    if isinstance(label, tuple):
        return list(label)
    return label


def _cmd_structure_constants(args) -> tuple[int, dict]:
    data = structure_constants(args.n, args.family, force=args.force)
    data["labels"] = [_label_json(args.family, lab) for lab in data["labels"]]
    data["representatives"] = [list(p) for p in data["representatives"]]
    if data["violation"] is not None:
        v = data["violation"]
        data["violation"] = {
            "pair": [_label_json(args.family, lab) for lab in v["pair"]],
            "class": _label_json(args.family, v["class"]),
            "elements": [list(p) for p in v["elements"]],
            "counts": v["counts"],
        }
    return 0, data


def _cmd_qsym_expand(args) -> tuple[int, dict]:
    perm = _parse_perm(args.perm)
    exp = delta_expansion(perm, args.flavor, args.basis)
    out = {"flavor": args.flavor, "perm": perm}
    out.update(exp.to_json())
    return 0, out


_PEAK_TABLE_KINDS = (
    "A_eulerian",
    "B_eulerian",
    "B_cyclic_eulerian",
    "W_interior",
    "W_left",
    "W_plus",
    "W_minus",
)
_43_IDENTITIES = ("augeul", "peeul1", "peeul2", "bpeeul1", "bpeeul2")


def _cmd_peak_table(args) -> tuple[int, dict]:
    polys = {
        kind: _poly_strings(peak_polynomial(args.n, kind, force=args.force))
        for kind in _PEAK_TABLE_KINDS
    }
    weighted = [
        _poly_strings(peak_polynomial(args.n, "W_weighted", i=i, force=args.force))
        for i in range(args.n + 1)
    ]
    identities = {
        which: identity_check_43(args.n, which, force=args.force)
        for which in _43_IDENTITIES
    }
    code = 0 if all(identities.values()) else 1
    return code, {
        "n": args.n,
        "polynomials": polys,
        "weighted_by_negatives": weighted,
        "identities": identities,
    }


def _cmd_closure(args) -> tuple[int, dict]:
    labels = family_labels(args.family, args.n, force=args.force)
    sums = [class_sum(args.n, args.family, lab, force=args.force) for lab in labels]
    rank = span_rank(sums)
    basis = multiplicative_closure(sums)
    return 0, {
        "family": args.family,
        "n": args.n,
        "class_count": len(labels),
        "span_rank": rank,
        "closure_rank": len(basis),
        "closed": len(basis) == rank,
        "closure_basis": [e.to_json() for e in basis],
    }


def _add_force(p: argparse.ArgumentParser) -> None:
    p.add_argument("--force", action="store_true", help="drop the size guards")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="peaklab",
        description="Exact descent and peak combinatorics on S_n and B_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="all statistic sets and counts of one permutation")
    p.add_argument("perm", help='permutation, e.g. "[2,1,4,3,5]" or "[-2,1]"')
    p.add_argument("--signed", action="store_true", help="read as a signed permutation")
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("order-poly", help="counting polynomial of one chain")
    p.add_argument("perm")
    p.add_argument("--kind", required=True, choices=sorted(ORDER_POLY_KINDS))
    p.add_argument("--gf", action="store_true",
                   help="include the closed-form generating function")
    p.set_defaults(handler=_cmd_order_poly)

    p = sub.add_parser("idempotents", help="orthogonal idempotents of one family")
    p.add_argument("--family", required=True, choices=sorted(STRUCTURE_FAMILIES))
    p.add_argument("-n", type=int, required=True)
    _add_force(p)
    p.set_defaults(handler=_cmd_idempotents)

    p = sub.add_parser("verify", help="run registered identity checks")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--theorem", help="one registered theorem id")
    which.add_argument("--all", action="store_true", help="every registered id")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--sample", type=int, default=None,
                   help="per-pair sample count for sizes past the sweep guard")
    _add_force(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("structure-constants",
                       help="class-sum multiplication tensor of a set-valued family")
    p.add_argument("--family", required=True)
    p.add_argument("-n", type=int, required=True)
    _add_force(p)
    p.set_defaults(handler=_cmd_structure_constants)

    p = sub.add_parser("qsym", help="quasisymmetric expansions")
    qsub = p.add_subparsers(dest="qsym_command", required=True)
    q = qsub.add_parser("expand", help="basis expansion of one enriched enumerator")
    q.add_argument("perm")
    q.add_argument("--flavor", required=True, choices=("interior", "left", "B"))
    q.add_argument("--basis", default="monomial", choices=("monomial", "fundamental"))
    q.set_defaults(handler=_cmd_qsym_expand)

    p = sub.add_parser("peak-table",
                       help="peak and Eulerian distribution polynomials with their hooks")
    p.add_argument("-n", type=int, required=True)
    _add_force(p)
    p.set_defaults(handler=_cmd_peak_table)

    p = sub.add_parser("closure", help="multiplicative closure of one class-sum span")
    p.add_argument("--family", required=True, choices=sorted(CLASS_FAMILIES))
    p.add_argument("-n", type=int, required=True)
    _add_force(p)
    p.set_defaults(handler=_cmd_closure)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        code, payload = args.handler(args)
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(payload, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
