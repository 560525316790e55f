"""Command-line interface.

Subcommands: compute (single values), table (grid sweeps), verify
(cross-route / oracle / inequality suites), limits (asymptotic comparisons).
JSON output is deterministic: fixed field order and 17-significant-digit
floats so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from . import asympt, momom, oracle, posmom, uncertainty
from .errors import HydromomentsError, OrderOutOfDomain, OrderOutOfRegime
from .posmom import MomentResult
from .specfun import ExactValue
from .states import HydrogenicState, Space, make_state

SCHEMA_VERSION = "hydromoments/1"

CSV_COLUMNS = [
    "D", "n", "l", "Z", "space", "alpha", "mode",
    "value_decimal", "value_exact_coeff", "value_exact_pipow",
    "error_bound", "status",
]

EXIT_DOMAIN = 2
EXIT_NUMERICAL = 3


def fmt_float(x: float) -> str:
    return format(x, ".17g")


def exact_to_dict(v: ExactValue) -> dict:
    return {
        "coeff": f"{v.coeff.numerator}/{v.coeff.denominator}",
        "piPow": f"{v.pi_pow.numerator}/{v.pi_pow.denominator}",
        "decimal": fmt_float(v.to_float()),
    }


def result_to_dict(res: MomentResult) -> dict:
    s = res.state
    out = {
        "schemaVersion": SCHEMA_VERSION,
        "state": {"D": s.D, "n": s.n, "l": s.l, "Z": fmt_float(s.Z)},
        "space": res.space.value,
        "alpha": fmt_float(res.alpha),
        "method": res.method.value,
        "mode": "exact" if res.is_exact else "float",
        "value": exact_to_dict(res.value) if res.is_exact else fmt_float(res.value),
        "errorBound": fmt_float(res.error_estimate),
    }
    return out


def result_to_csv_row(res: MomentResult, mode: str) -> list:
    s = res.state
    exact = res.value if res.is_exact else None
    return [
        s.D, s.n, s.l, fmt_float(s.Z), res.space.value, fmt_float(res.alpha), mode,
        fmt_float(res.as_float()),
        f"{exact.coeff.numerator}/{exact.coeff.denominator}" if exact else "",
        f"{exact.pi_pow.numerator}/{exact.pi_pow.denominator}" if exact else "",
        fmt_float(res.error_estimate),
        "ok",
    ]


def _compute_one(state: HydrogenicState, space: Space, alpha: float, mode: str) -> MomentResult:
    if mode == "oracle":
        if space is Space.POSITION:
            return oracle.quad_r_moment(state, alpha)
        return oracle.quad_p_moment(state, alpha)
    if space is Space.POSITION:
        return posmom.r_moment(state, alpha, mode=mode)
    return momom.p_moment(state, alpha, mode=mode)


def _n_workers() -> int:
    env = os.environ.get("HYDROMOMENTS_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def cmd_compute(args) -> int:
    try:
        state = make_state(args.D, args.n, args.l, args.Z)
        space = Space(args.space)
        mode = args.mode
        if mode == "auto":
            mode = "exact" if float(args.alpha).is_integer() else "float"
        alpha = int(args.alpha) if float(args.alpha).is_integer() and mode == "exact" else float(args.alpha)
        res = _compute_one(state, space, alpha, mode)
    except (OrderOutOfDomain, OrderOutOfRegime, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except HydromomentsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    if args.format == "json":
        print(json.dumps(result_to_dict(res)))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(CSV_COLUMNS)
        w.writerow(result_to_csv_row(res, mode))
        sys.stdout.write(buf.getvalue())
    else:
        if res.is_exact:
            v = res.value
            pi = "" if v.pi_pow == 0 else f" * pi^{v.pi_pow}"
            print(f"<{res.space.value}^{res.alpha:g}> = {v.coeff}{pi} = {res.as_float():.12g}")
        else:
            print(
                f"<{res.space.value}^{res.alpha:g}> = {res.as_float():.12g}"
                f" (+- {res.error_estimate:.3g}, {res.method.value})"
            )
    return 0


def _parse_range(spec: str) -> list[int]:
    if ":" in spec:
        lo, hi = spec.split(":")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in spec.split(",") if x]


def cmd_table(args) -> int:
    Ds = _parse_range(args.D_range)
    ns = _parse_range(args.n_range)
    alphas = [float(x) for x in args.alpha_list.split(",") if x]
    space = Space(args.space)
    tasks = []
    for D in sorted(Ds):
        for n in sorted(ns):
            ls = range(n) if args.l == "all" else [int(args.l)]
            for l in ls:
                if l >= n:
                    continue
                for alpha in sorted(alphas):
                    tasks.append((D, n, l, alpha))

    def work(task):
        D, n, l, alpha = task
        row_id = [D, n, l, fmt_float(args.Z), space.value, fmt_float(alpha), args.mode]
        try:
            state = make_state(D, n, l, args.Z)
            mode = args.mode
            if mode == "auto":
                mode = "exact" if alpha.is_integer() else "float"
            a = int(alpha) if alpha.is_integer() and mode == "exact" else alpha
            res = _compute_one(state, space, a, mode)
            return task, result_to_csv_row(res, mode), result_to_dict(res)
        except (OrderOutOfDomain, OrderOutOfRegime) as exc:
            return task, row_id + ["", "", "", "", "out-of-domain"], {
                "schemaVersion": SCHEMA_VERSION,
                "state": {"D": D, "n": n, "l": l, "Z": fmt_float(args.Z)},
                "space": space.value, "alpha": fmt_float(alpha),
                "status": "out-of-domain", "message": str(exc),
            }
        except HydromomentsError as exc:
            return task, row_id + ["", "", "", "", "numerical-failure"], {
                "schemaVersion": SCHEMA_VERSION,
                "state": {"D": D, "n": n, "l": l, "Z": fmt_float(args.Z)},
                "space": space.value, "alpha": fmt_float(alpha),
                "status": "numerical-failure", "message": str(exc),
            }

    if args.parallel:
        with ThreadPoolExecutor(max_workers=_n_workers()) as pool:
            results = list(pool.map(work, tasks))
    else:
        results = [work(t) for t in tasks]
    results.sort(key=lambda r: r[0])

    if args.format == "json":
        for _, _, rec in results:
            print(json.dumps(rec))
    else:
        w = csv.writer(sys.stdout)
        w.writerow(CSV_COLUMNS)
        for _, row, _ in results:
            w.writerow(row)
    return 0


def _grid(size: str):
    if size == "small":
        return [(D, n, l) for D in (2, 3, 4, 6) for n in range(1, 4) for l in range(n)]
    return [(D, n, l) for D in range(2, 9) for n in range(1, 6) for l in range(n)]


def _suite_routes(states, findings):
    worst = 0.0
    fails = 0
    checks = 0
    for D, n, l in states:
        state = make_state(D, n, l, 1.0)
        lo, hi = state.momentum_interval()
        for alpha in range(lo + 1, hi):
            base = momom.p_moment(state, alpha, mode="exact", route="single").value
            for route in ("hyp5f4", "double"):
                other = momom.p_moment(state, alpha, mode="exact", route=route).value
                checks += 1
                if base != other:
                    fails += 1
    return checks, fails, worst


def _suite_reflection(states, findings):
    fails = 0
    checks = 0
    for D, n, l in states:
        state = make_state(D, n, l, 1.0)
        lo, hi = state.momentum_interval()
        for alpha in range(lo + 1, hi):
            if not lo < 2 - alpha < hi:
                continue
            checks += 1
            refl = momom.reflect(state, alpha, mode="exact").value
            direct = momom.p_moment(state, 2 - alpha, mode="exact").value
            if refl != direct:
                fails += 1
    return checks, fails, 0.0


def _suite_oracle(states, findings):
    rng = random.Random(20240817)
    worst = 0.0
    fails = 0
    checks = 0
    for D, n, l in states:
        state = make_state(D, n, l, 1.0)
        lo, hi = state.momentum_interval()
        for _ in range(3):
            alpha = rng.uniform(lo + 0.25, hi - 0.25)
            ex = momom.p_moment(state, alpha, mode="float").as_float()
            qv = oracle.quad_p_moment(state, alpha).value
            dev = abs(ex / qv - 1)
            worst = max(worst, dev)
            checks += 1
            if dev > 1e-10:
                fails += 1
            alpha_r = rng.uniform(lo + 0.25, lo + 6.0)
            ex = posmom.r_moment(state, alpha_r, mode="float").as_float()
            qv = oracle.quad_r_moment(state, alpha_r).value
            dev = abs(ex / qv - 1)
            worst = max(worst, dev)
            checks += 1
            if dev > 1e-10:
                fails += 1
    return checks, fails, worst


def _suite_asymptotics(states, findings):
    fails = 0
    checks = 0
    worst = 0.0
    for alpha in (0.5, 1.5, 2.5):
        prev = None
        for n in (20, 40, 80):
            state = make_state(3, n, 0, 1.0)
            ex = momom.p_moment(state, alpha, mode="float").as_float()
            dev = abs(ex / asympt.rydberg_p(state, alpha).corrected - 1)
            checks += 1
            if prev is not None and dev >= prev:
                fails += 1
            prev = dev
        worst = max(worst, prev)
    return checks, fails, worst


def _suite_uncertainty(states, findings):
    fails = 0
    checks = 0
    for D, n, l in states:
        state = make_state(D, n, l, 1.0)
        reports = []
        hg = uncertainty.heisenberg_general(state, 2, 2)
        reports += [hg, *hg.siblings]
        if D > 2:
            pb = uncertainty.pitt_beckner(state, 2)
            reports += [pb, *pb.siblings]
        fp = uncertainty.fermion_product(state, 2, 2)
        reports += [fp, *fp.siblings]
        if l == 0:
            dt = uncertainty.daubechies_thakkar(state, 2)
            reports += [dt, *dt.siblings]
        for rep in reports:
            checks += 1
            if not rep.satisfied:
                if rep.rigorous:
                    fails += 1
                else:
                    findings.append(
                        f"soft violation: {rep.name.value} at D={D} n={n} l={l}"
                        f" ratio={rep.ratio:.6g}"
                    )
    return checks, fails, 0.0


def cmd_verify(args) -> int:
    suites = {
        "routes": _suite_routes,
        "reflection": _suite_reflection,
        "oracle": _suite_oracle,
        "asymptotics": _suite_asymptotics,
        "uncertainty": _suite_uncertainty,
    }
    wanted = list(suites) if args.suite == "all" else [args.suite]
    states = _grid(args.grid)
    findings: list[str] = []
    hard_fail = False
    for name in wanted:
        checks, fails, worst = suites[name](states, findings)
        status = "PASS" if fails == 0 else "FAIL"
        print(f"{name}: {status} ({checks} checks, {fails} failures, worst deviation {worst:.3g})")
        if fails:
            hard_fail = True
    for f in findings:
        print(f"finding: {f}")
    return 1 if hard_fail else 0


def cmd_limits(args) -> int:
    try:
        rows = []
        if args.regime == "rydberg":
            seq = _parse_range(args.n_seq)
            for n in seq:
                l = n - 1 if args.family == "circular" else 0
                state = make_state(3, n, l, args.Z)
                if args.space == "p":
                    est = (
                        asympt.rydberg_circular_p(state, args.alpha)
                        if args.family == "circular"
                        else asympt.rydberg_p(state, args.alpha)
                    )
                    ex = momom.p_moment(state, args.alpha, mode="float").as_float()
                else:
                    est = asympt.rydberg_r(state, args.alpha)
                    ex = posmom.r_moment(state, args.alpha, mode="float").as_float()
                rows.append((n, ex, est.leading, est.corrected, ex / est.corrected - 1))
        else:
            seq = _parse_range(args.D_seq)
            for D in seq:
                state = make_state(D, args.n, args.l, args.Z)
                space = Space(args.space)
                est = asympt.highD(state, args.alpha, space)
                ex = (
                    posmom.r_moment(state, args.alpha, mode="float")
                    if space is Space.POSITION
                    else momom.p_moment(state, args.alpha, mode="float")
                ).as_float()
                rows.append((D, ex, est.leading, est.corrected, ex / est.corrected - 1))
    except (OrderOutOfDomain, OrderOutOfRegime) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    w = csv.writer(sys.stdout)
    w.writerow(["parameter", "exact", "leading", "corrected", "ratio_minus_1"])
    for row in rows:
        w.writerow([row[0]] + [fmt_float(v) for v in row[1:]])
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hydromoments",
        description="Radial position/momentum expectation values of D-dimensional hydrogenic states.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute a single expectation value")
    c.add_argument("--space", choices=["r", "p"], required=True)
    c.add_argument("--alpha", type=float, required=True)
    c.add_argument("--D", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--l", type=int, required=True)
    c.add_argument("--Z", type=float, default=1.0)
    c.add_argument("--mode", choices=["auto", "exact", "float", "oracle"], default="auto")
    c.add_argument("--format", choices=["json", "csv", "human"], default="human")
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="sweep a grid of states and orders")
    t.add_argument("--space", choices=["r", "p"], required=True)
    t.add_argument("--D-range", dest="D_range", required=True)
    t.add_argument("--n-range", dest="n_range", required=True)
    t.add_argument("--l", default="all")
    t.add_argument("--alpha-list", dest="alpha_list", required=True)
    t.add_argument("--Z", type=float, default=1.0)
    t.add_argument("--mode", choices=["auto", "exact", "float", "oracle"], default="auto")
    t.add_argument("--format", choices=["json", "csv"], default="csv")
    t.add_argument("--parallel", action="store_true")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run cross-checking suites")
    v.add_argument(
        "--suite",
        choices=["routes", "reflection", "oracle", "asymptotics", "uncertainty", "all"],
        default="all",
    )
    v.add_argument("--grid", choices=["small", "full"], default="small")
    v.set_defaults(func=cmd_verify)

    li = sub.add_parser("limits", help="compare exact values with asymptotic estimates")
    li.add_argument("--regime", choices=["rydberg", "highd"], required=True)
    li.add_argument("--alpha", type=float, required=True)
    li.add_argument("--space", choices=["r", "p"], default="p")
    li.add_argument("--family", choices=["nS", "circular"], default="nS")
    li.add_argument("--n-seq", dest="n_seq", default="20,40,80,160")
    li.add_argument("--D-seq", dest="D_seq", default="16,32,64,128")
    li.add_argument("--n", type=int, default=1)
    li.add_argument("--l", type=int, default=0)
    li.add_argument("--Z", type=float, default=1.0)
    li.set_defaults(func=cmd_limits)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
