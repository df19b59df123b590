"""Command-line interface: one JSON document per invocation.

Subcommands mirror the library modules:

    identities verify | taxicab | nearmiss
    ec count | map
    ff rank | lfunction | differentials
    surface analyze
    twists table

Every report carries {"schema": 1, "command", "parameters", "results",
"status", "timing_seconds"}; big integers are serialized as decimal
strings so consumers never overflow.  Exit code 0 iff status is "ok".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import identities
from .elliptic import (
    CubicTwistCurve,
    Point,
    count_points,
    hesse_to_weierstrass,
)
from .exact import FiniteField, Polynomial
from .function_field import (
    build_family,
    cm_twist,
    lfunction,
    pullback_differential,
    rank_bounds,
    rank_report,
    z_rank,
)
from .surface import analyze, classify_fibers, euler_and_k3
from .twists import twist_table


@dataclass
class RunReport:
    command: str
    parameters: dict
    results: dict
    status: str = "ok"
    timing: float = 0.0

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "status": self.status,
            "timing_seconds": round(self.timing, 3),
        }


def _max_workers(requested: int | None) -> int:
    cap = os.environ.get("TWOCUBES_MAX_WORKERS")
    w = requested if requested is not None else 1
    if cap:
        w = max(1, min(w, int(cap)))
    return w


def _parse_poly(text: str) -> Polynomial:
    """Accept either a comma-separated low-to-high coefficient list or an
    expression in T (parsed by sympy)."""
    if "," in text and "T" not in text and "t" not in text:
        return Polynomial(tuple(Fraction(c.strip()) for c in text.split(",")))
    import sympy

    T = sympy.Symbol("T")
    expr = sympy.sympify(text.replace("^", "**"), locals={"T": T})
    p = sympy.Poly(expr, T)
    coeffs = [Fraction(str(c)) for c in reversed(p.all_coeffs())]
    return Polynomial(tuple(coeffs))


# -- subcommand handlers --------------------------------------------------------


def _run_identities_verify(args) -> dict:
    r1913 = identities.verify_ramanujan_1913()
    r20 = identities.verify_entry20()
    euler_sym = identities.euler_family_symbolic_check()
    quad = identities.verify_euler_family(3, 0, 1)
    all_ok = r1913.zero_polynomial and r20.zero_polynomial and euler_sym
    return {
        "all_verified": all_ok,
        "identity_1913": r1913.to_json(),
        "entry_20_iii": r20.to_json(),
        "euler_family": {
            "symbolic_zero": euler_sym,
            "example": {
                "alpha": "3",
                "beta": "0",
                "gamma": "1",
                "quadruple": [str(v) for v in (quad.x, quad.y, quad.z, quad.w)],
                "common_value": str(quad.common_value()),
            },
        },
    }


def _run_identities_taxicab(args) -> dict:
    found = identities.taxicab_search(args.bound, args.reps)
    return {
        "bound": str(args.bound),
        "reps": args.reps,
        "entries": [
            {"n": str(n), "representations": [[str(a), str(b)] for a, b in reps]}
            for n, reps in found
        ],
    }


def _run_identities_nearmiss(args) -> dict:
    families = identities.default_nearmiss_families()
    config = families[args.family]
    tuples = identities.nearmiss_stream(config, args.count)
    return {
        "family": args.family,
        "numerators": [[str(c) for c in p.coeffs] for p in config.numerators],
        "denominator": [str(c) for c in config.denominator.coeffs],
        "tuples": [
            {"n": n, "a": str(a), "b": str(b), "c": str(c), "epsilon": eps}
            for (n, a, b, c, eps) in tuples
        ],
    }


def _run_ec_count(args) -> dict:
    field = FiniteField(args.p, args.n)
    if "," in args.a:
        A = field.element(tuple(int(c) for c in args.a.split(",")))
    else:
        A = field.element(int(args.a))
    workers = _max_workers(args.workers)
    n_points = count_points(field, A, workers=workers)
    return {
        "p": args.p,
        "n": args.n,
        "q": str(field.q),
        "A": list(A.coeffs),
        "count": str(n_points),
        "trace": str(field.q + 1 - n_points),
    }


def _run_ec_map(args) -> dict:
    d = Fraction(args.d)
    curve = CubicTwistCurve(d)
    P = Point(Fraction(args.x), Fraction(args.y))
    if not curve.contains(P):
        raise ValueError(f"({args.x}, {args.y}) is not on X^3 + Y^3 = {d}")
    m = hesse_to_weierstrass(curve)
    W = m.to_weierstrass(P)
    return {
        "d": str(d),
        "weierstrass_A": str(m.weierstrass.A),
        "u": str(W.x) if not W.at_infinity else None,
        "v": str(W.y) if not W.at_infinity else None,
        "at_infinity": W.at_infinity,
        "on_curve": m.weierstrass.contains(W),
    }


def _run_ff_rank(args) -> dict:
    return rank_report(args.p).to_json()


def _run_ff_lfunction(args) -> dict:
    L = lfunction(args.p, direct=args.direct)
    arith, geom = rank_bounds(L)
    return {
        "p": args.p,
        "degree": L.degree,
        "coeffs": [str(c) for c in L.coeffs],
        "counted_cn": {str(n): str(c) for n, c in L.counted},
        "functional_equation_sign": L.functional_equation_sign(),
        "factorization": _factor_l(L),
        "arith_bound": arith,
        "geom_bound": geom,
    }


def _factor_l(L) -> list[dict]:
    import sympy

    u = sympy.Symbol("u")
    expr = sum(c * u**i for i, c in enumerate(L.coeffs))
    content, factors = sympy.Poly(expr, u).factor_list()
    out = []
    if content != 1:
        out.append({"factor": [str(content)], "multiplicity": 1})
    for f, mult in sorted(factors, key=lambda fm: (sympy.degree(fm[0], u), str(fm[0]))):
        coeffs = [str(c) for c in reversed(sympy.Poly(f, u).all_coeffs())]
        out.append({"factor": coeffs, "multiplicity": int(mult)})
    return out


def _run_ff_differentials(args) -> dict:
    fam = build_family()
    w1 = pullback_differential(fam.p1)
    w2 = pullback_differential(fam.p2)
    cm1 = pullback_differential(cm_twist(fam.p1))
    cm2 = pullback_differential(cm_twist(fam.p2))
    return {
        "k": [str(c) for c in fam.k.coeffs],
        "sections": {
            "P1": {"x": fam.p1.x.format(), "y": fam.p1.y.format()},
            "P2": {"x": fam.p2.x.format(), "y": fam.p2.y.format()},
        },
        "differentials": {
            "P1": w1.w.format(),
            "P2": w2.w.format(),
        },
        "z_rank_rational": z_rank([w1, w2]),
        "z_rank_cm_extended": z_rank([w1, w2, cm1, cm2]),
    }


def _run_surface_analyze(args) -> dict:
    if args.k is not None:
        k = _parse_poly(args.k)
        fibers = classify_fibers(k)
        e, is_k3 = euler_and_k3(fibers)
        return {
            "k": [str(c) for c in k.coeffs],
            "fibers": [f.to_json() for f in fibers],
            "euler_number": e,
            "chi": e // 12,
            "is_k3": is_k3,
            "note": "picard requires the family surface; no rank supplied for custom k",
        }
    report = analyze()
    return report.to_json()


def _run_twists_table(args) -> dict:
    table = twist_table(args.t_from, args.t_to, certify=args.certify, prime_budget=args.budget)
    payload = table.to_json()
    if args.certify:
        exhausted = [
            r for r in table.records if r.d > 2 and r.certificate is None
        ]
        payload["summary"]["uncertified"] = len(exhausted)
    return payload


def _twists_csv(results: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["t", "k", "d", "x1", "y1", "x2", "y2", "cert_prime"])
    for r in results["records"]:
        writer.writerow(
            [r["t"], r["k"], r["d"], r["x1"], r["y1"], r["x2"], r["y2"], r["cert_prime"] or ""]
        )
    return buf.getvalue()


# -- parser / dispatch ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twocubes", description="Exact computations around sums of two cubes."
    )
    top = parser.add_subparsers(dest="group", required=True)

    ident = top.add_parser("identities", help="cube identities and near misses")
    ident_sub = ident.add_subparsers(dest="command", required=True)
    ident_sub.add_parser("verify", help="verify the classical identities symbolically")
    taxi = ident_sub.add_parser("taxicab", help="numbers with several two-cube representations")
    taxi.add_argument("--bound", type=int, required=True)
    taxi.add_argument("--reps", type=int, default=2)
    near = ident_sub.add_parser("nearmiss", help="x^3 + y^3 = z^3 +/- 1 families")
    near.add_argument("--family", choices=("zero", "infinity"), default="zero")
    near.add_argument("--count", type=int, default=10)

    ec = top.add_parser("ec", help="elliptic curve models and counting")
    ec_sub = ec.add_subparsers(dest="command", required=True)
    ecc = ec_sub.add_parser("count", help="count points of v^2 = u^3 + A over F_{p^n}")
    ecc.add_argument("--p", type=int, required=True)
    ecc.add_argument("--n", type=int, default=1)
    ecc.add_argument("--a", type=str, required=True, help="integer, or comma digits low-to-high")
    ecc.add_argument("--workers", type=int, default=None)
    ecm = ec_sub.add_parser("map", help="map a Hesse point to the Weierstrass model")
    ecm.add_argument("--d", type=str, required=True)
    ecm.add_argument("--x", type=str, required=True)
    ecm.add_argument("--y", type=str, required=True)

    ff = top.add_parser("ff", help="the curve over Q(T) and its L-function")
    ff_sub = ff.add_subparsers(dest="command", required=True)
    ffr = ff_sub.add_parser("rank", help="rank bounds over Q(T) and geometrically")
    ffr.add_argument("--p", type=int, default=17)
    ffl = ff_sub.add_parser("lfunction", help="degree-8 L-polynomial mod p")
    ffl.add_argument("--p", type=int, required=True)
    ffl.add_argument("--direct", action="store_true", help="count c_1..c_8 directly")
    ff_sub.add_parser("differentials", help="pullback differentials of the sections")

    surf = top.add_parser("surface", help="elliptic surface analysis")
    surf_sub = surf.add_subparsers(dest="command", required=True)
    sana = surf_sub.add_parser("analyze", help="fibers, Euler number, K3 flag, Picard number")
    sana.add_argument("--k", type=str, default=None, help="custom squarefree k(T)")

    tw = top.add_parser("twists", help="specializations to cubic twists")
    tw_sub = tw.add_subparsers(dest="command", required=True)
    twt = tw_sub.add_parser("table", help="twist records for integer t in a range")
    twt.add_argument("--from", dest="t_from", type=int, required=True)
    twt.add_argument("--to", dest="t_to", type=int, required=True)
    twt.add_argument("--certify", action="store_true")
    twt.add_argument("--budget", type=int, default=50)
    twt.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


_HANDLERS = {
    ("identities", "verify"): _run_identities_verify,
    ("identities", "taxicab"): _run_identities_taxicab,
    ("identities", "nearmiss"): _run_identities_nearmiss,
    ("ec", "count"): _run_ec_count,
    ("ec", "map"): _run_ec_map,
    ("ff", "rank"): _run_ff_rank,
    ("ff", "lfunction"): _run_ff_lfunction,
    ("ff", "differentials"): _run_ff_differentials,
    ("surface", "analyze"): _run_surface_analyze,
    ("twists", "table"): _run_twists_table,
}


def dispatch(argv: list[str]) -> tuple[RunReport, str | None]:
    """Run one subcommand; returns the report and an optional CSV body."""
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[(args.group, args.command)]
    params = {
        k: v for k, v in vars(args).items() if k not in ("group", "command") and v is not None
    }
    started = time.perf_counter()
    try:
        results = handler(args)
        status = "ok"
    except Exception as exc:  # surfaced in the report, nonzero exit
        results = {"error": f"{type(exc).__name__}: {exc}"}
        status = "failed"
    timing = time.perf_counter() - started
    if (
        status == "ok"
        and args.group == "twists"
        and args.certify
        and results.get("summary", {}).get("uncertified", 0) > 0
    ):
        status = "exhausted"
    report = RunReport(
        f"{args.group} {args.command}", {k: str(v) for k, v in params.items()}, results,
        status, timing,
    )
    csv_body = None
    if getattr(args, "format", "json") == "csv" and status != "failed":
        csv_body = _twists_csv(results)
    return report, csv_body


def main(argv: list[str] | None = None) -> int:
    report, csv_body = dispatch(sys.argv[1:] if argv is None else argv)
    if csv_body is not None:
        sys.stdout.write(csv_body)
    else:
        json.dump(report.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0 if report.status == "ok" else 1


if __name__ == "__main__":
    sys.exit(main())
