"""Command-line interface: ``kstability {verify-paper,check,scan,certify,expand}``.

Exit codes: 0 success, 1 negative mathematical result, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import kernels
from .amplecone import BundleParams, EmptyPolytope, is_ample, moment_polytope, normalize
from .certify import (
    CERT_FORMAT,
    CERTIFIED,
    DegenerateRegion,
    certify_margin_ladder,
    prove_closed_triangle,
    scan_grid,
)
from .criterion import assemble_C, evaluate_C, route_discrepancy
from .identities import identity_suite, inequality_chains
from .ratpoly import UniPoly, fraction_str

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _approx(x: Fraction) -> str:
    return f"{float(x):.12g}"


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def _parse_poly(text: str) -> UniPoly:
    return UniPoly(Fraction(c) for c in text.split(","))


# --------------------------------------------------------------------------


def cmd_verify_paper(args) -> int:
    Q = _parse_poly(args.perturb_q) if args.perturb_q else None
    checks = identity_suite(Q=Q)
    chains = inequality_chains(args.samples, args.seed)
    failed = 0
    print(f"identities ({len(checks)}):")
    for c in checks:
        failed += not c.ok
        line = f"{'PASS' if c.ok else 'FAIL'}  {c.name}"
        print(line + (f"  [{c.detail}]" if c.detail else ""))
    print(f"inequality chains ({len(chains)}):")
    for c in chains:
        failed += not c.ok
        line = f"{'PASS' if c.ok else 'FAIL'}  {c.name}"
        print(line + (f"  [{c.detail}]" if c.detail else ""))
    gap = route_discrepancy()
    if not gap.is_zero():
        print(f"note: C from quadrature minus C from closed forms = {gap}")
    print(f"{failed} failed")
    return EXIT_NEGATIVE if failed else EXIT_OK


def cmd_check(args) -> int:
    p = BundleParams(args.a, args.b, args.c)
    ample = is_ample(p)
    print(f"D(a,b,c) = -{p.a}E + {p.b}<> + {p.c}<3")
    print(f"ample: {'yes' if ample else 'no'} (need 0 < a < min(b, c))")
    try:
        seg = moment_polytope(p)
        base = seg.base_weight
        print(
            f"moment polytope: ({fraction_str(base.x1)}, {fraction_str(base.x2)}) "
            f"+ [{fraction_str(seg.lo)}, {fraction_str(seg.hi)}] alpha2"
        )
    except EmptyPolytope:
        print("moment polytope: empty")
    if not ample:
        print("verdict: NotAmple")
        return EXIT_NEGATIVE
    n = normalize(p)
    rep = evaluate_C(n.a_n, n.b_n)
    print(f"normalized: ({fraction_str(n.a_n)}, {fraction_str(n.b_n)})")
    line = f"C = {fraction_str(rep.value)}"
    if args.approx:
        line += f"  (approx {_approx(rep.value)}, non-authoritative)"
    print(line)
    print(f"verdict: {rep.verdict}")
    return EXIT_OK if rep.value > 0 else EXIT_NEGATIVE


def scan_csv(n: int, approx: bool = False, workers: int = 1):
    res = scan_grid(n, workers=workers)
    header = "a,b,C,C_approx" if approx else "a,b,C"
    lines = [header]
    for a, b, c in res.rows:
        row = f"{fraction_str(a)},{fraction_str(b)},{fraction_str(c)}"
        if approx:
            row += f",{_approx(c)}"
        lines.append(row)
    return res, "\n".join(lines) + "\n"


def cmd_scan(args) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    res, text = scan_csv(args.n, args.approx, args.workers)
    _write_text(args.out, text)
    report = sys.stdout if args.out not in (None, "-") else sys.stderr
    print(f"points: {len(res.rows)}", file=report)
    print(
        f"minimum C = {fraction_str(res.minimum)} at "
        f"({fraction_str(res.argmin[0])}, {fraction_str(res.argmin[1])})",
        file=report,
    )
    ok = res.minimum > 0
    print(f"all positive: {'yes' if ok else 'no'}", file=report)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_certify(args) -> int:
    import json

    if args.delta is None and not args.whole_triangle:
        raise UsageError("give --delta and/or --whole-triangle")
    if args.max_depth < 0:
        raise UsageError("--max-depth must be >= 0")
    certs = []
    if args.delta is not None:
        if args.delta <= 0:
            raise UsageError("--delta must be > 0")
        try:
            certs = certify_margin_ladder([args.delta], args.max_depth, workers=args.workers)
        except DegenerateRegion as exc:
            raise UsageError(f"DegenerateRegion: {exc}") from None
    proofs = [prove_closed_triangle("C"), prove_closed_triangle("C_tilde")] if args.whole_triangle else []
    doc = {
        "format": CERT_FORMAT,
        "certificates": [c.to_json() for c in certs],
    }
    if proofs:
        doc["closed_triangle"] = [p.to_json() for p in proofs]
    if args.out:
        _write_text(args.out, json.dumps(doc, indent=1) + "\n")
    ok = True
    for c in certs:
        st = c.stats()
        verts = ", ".join(f"({fraction_str(x)}, {fraction_str(y)})" for x, y in c.region.vertices)
        print(f"{c.polynomial_id} on [{verts}]: {c.outcome}")
        print(
            f"  leaves {len(c.leaves)} (positive {st['Positive']}, negative {st['Negative']}, "
            f"inconclusive {st['Inconclusive']}), depth {st['depth']} of {c.max_depth}"
        )
        if c.witness is not None:
            print(
                f"  witness ({fraction_str(c.witness[0])}, {fraction_str(c.witness[1])}) "
                f"value {fraction_str(c.witness_value)}"
            )
        ok &= c.outcome == CERTIFIED
    for p in proofs:
        print(
            f"{p.polynomial_id} on closed triangle (0,0),(0,1/2),(1/2,1/2): {p.outcome} "
            f"(degree {p.degree}, {len(p.zero)} zero and {len(p.negative)} negative coefficients)"
        )
        ok &= p.outcome == CERTIFIED
    return EXIT_OK if ok else EXIT_NEGATIVE


def expand_text(route: str = "displayed") -> str:
    C = assemble_C(route)
    items = sorted(C.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))
    lines = ["a_exp,b_exp,coeff"]
    lines += [f"{i},{j},{fraction_str(c)}" for (i, j), c in items]
    return "\n".join(lines) + "\n"


def cmd_expand(args) -> int:
    text = expand_text(args.route)
    _write_text(args.out, text)
    if args.out not in (None, "-"):
        print(f"{len(text.splitlines()) - 1} terms written to {args.out}")
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kstability",
        description="Exact K-stability checks for the blowup of P2 x P2 along the diagonal.",
    )
    ap.add_argument("--backend", choices=["auto", "python", "compiled"], default="auto",
                    help="integer kernel backend")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-paper", help="run the exact identity suite")
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--perturb-q", metavar="C0,C1,...",
                   help="replace Q by these coefficients (fault injection)")
    v.set_defaults(func=cmd_verify_paper)

    c = sub.add_parser("check", help="ampleness, moment polytope and C for D(a,b,c)")
    c.add_argument("a", type=int)
    c.add_argument("b", type=int)
    c.add_argument("c", type=int)
    c.add_argument("--approx", action="store_true", help="also print a decimal value")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("scan", help="exact C on the grid (i/2n, j/2n), 0 < i < j <= n")
    s.add_argument("n", type=int)
    s.add_argument("--out", "-o", help="CSV path (default: stdout)")
    s.add_argument("--approx", action="store_true", help="add a C_approx decimal column")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_scan)

    ce = sub.add_parser("certify", help="Bernstein positivity certificates")
    ce.add_argument("--delta", type=_rational)
    ce.add_argument("--max-depth", type=int, default=12)
    ce.add_argument("--out", "-o", help="certificate JSON path")
    ce.add_argument("--workers", type=int, default=1)
    ce.add_argument("--whole-triangle", action="store_true",
                    help="also certify C and C/(b-a) on the closed triangle")
    ce.set_defaults(func=cmd_certify)

    e = sub.add_parser("expand", help="print the expanded C(a,b)")
    e.add_argument("--out", "-o")
    e.add_argument("--route", choices=["displayed", "quadrature"], default="displayed")
    e.set_defaults(func=cmd_expand)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.backend != "auto":
        try:
            kernels.use_backend(args.backend)
        except RuntimeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
