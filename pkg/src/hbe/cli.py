"""Command-line front end.

Subcommands: list (registry), verify (exact sweeps), eval (single values),
fit (polynomial structure discovery), bench (closed form vs direct summation
timings), numeric (seeded floating-point suites and derivative checks).

Exit codes: 0 all checks passed, 1 at least one mismatch or failed tolerance,
2 usage or domain error.  Mismatch output always carries the exact rendered
values of both sides.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import catalog, numerics, recursions
from .catalog import EvalPoint, IdentityDescriptor, VerificationReport
from .errors import DomainError, PoleError, SingularSystemError
from .exact import ExactParam

REPORT_COLUMNS = ("identity", "m", "n", "equal", "lhs", "rhs",
                  "terms", "t_lhs_ns", "t_rhs_ns")
BENCH_COLUMNS = ("subject", "d", "n", "t_direct_ns", "t_closed_ns",
                 "t_rec_ns", "speedup_closed")


@dataclass
class RunConfig:
    command: str
    identities: list[str] = field(default_factory=lambda: ["all"])
    n_max: int = 200
    m_spec: Optional[list[str]] = None
    fmt: str = "text"
    seed: int = 0
    no_timing: bool = False
    order2_half: bool = False
    d: Optional[int] = None
    n: Optional[int] = None
    sum_kind: Optional[str] = None
    side: Optional[str] = None
    identity: Optional[str] = None
    tol: float = 1e-8
    trials: int = 50
    numeric_n_max: int = 15
    step: float = 1e-6


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("HBE_THREADS", "1")))
    except ValueError:
        return 1


def _select(cfg: RunConfig, regs: Sequence[IdentityDescriptor]
            ) -> list[IdentityDescriptor]:
    if cfg.identities == ["all"]:
        return list(regs)
    picked = []
    for ident in cfg.identities:
        picked.append(catalog.lookup(ident, regs))
    return picked


def _emit_records(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(records, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=REPORT_COLUMNS)
        writer.writeheader()
        for rec in records:
            writer.writerow(rec)
    else:
        raise ValueError(fmt)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

_WORKER_STATE: dict = {}


def _sweep_args(cfg, descs):
    for desc in descs:
        if desc.requires_m:
            if cfg.m_spec:
                ms = sorted({ExactParam.parse(s) for s in cfg.m_spec})
                for m in ms:
                    if desc.m_domain is not None and not desc.m_domain(m):
                        raise DomainError(
                            f"{desc.id} does not admit m = {m} ({desc.m_domain_desc})")
            else:
                ms = [m for m in catalog.DEFAULT_M_GRID
                      if desc.m_domain is None or desc.m_domain(m)]
            for m in ms:
                yield desc.id, m
        else:
            yield desc.id, None


def _run_sweep(ident: str, m, n_max: int, order2_half: bool
               ) -> list[VerificationReport]:
    regs = _WORKER_STATE.get("regs")
    if regs is None:
        regs = catalog.registry(order2_half_integers=order2_half)
    m_set = None if m is None else [m]
    return catalog.verify_range(ident, n_max, m_set=m_set, regs=regs)


def _sweep_worker(args):
    ident, m, n_max, order2_half = args
    return [r.to_record() for r in _run_sweep(ident, m, n_max, order2_half)]


def cmd_verify(cfg: RunConfig, regs, out) -> int:
    descs = _select(cfg, regs)
    jobs = list(_sweep_args(cfg, descs))
    threads = _threads()
    # the registry (with its closures) travels to fork-spawned workers via
    # inherited module state, not pickling
    _WORKER_STATE["regs"] = regs
    try:
        if threads > 1:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(max_workers=threads) as pool:
                chunks = list(pool.map(
                    _sweep_worker,
                    [(ident, m, cfg.n_max, cfg.order2_half) for ident, m in jobs]))
            records = [rec for chunk in chunks for rec in chunk]
            if cfg.no_timing:
                for rec in records:
                    rec["t_lhs_ns"] = 0
                    rec["t_rhs_ns"] = 0
        else:
            reports = [r for ident, m in jobs
                       for r in _run_sweep(ident, m, cfg.n_max, cfg.order2_half)]
            records = [r.to_record(no_timing=cfg.no_timing) for r in reports]
    finally:
        _WORKER_STATE.pop("regs", None)
    failures = [r for r in records if not r["equal"]]

    if cfg.fmt in ("json", "csv"):
        _emit_records(records, cfg.fmt, out)
    else:
        per_id: dict[str, list[dict]] = {}
        for rec in records:
            per_id.setdefault(rec["identity"], []).append(rec)
        for ident, recs in per_id.items():
            n_bad = sum(1 for r in recs if not r["equal"])
            status = "ok" if n_bad == 0 else f"{n_bad} MISMATCH"
            out.write(f"{ident:14s} {len(recs):6d} points  {status}\n")
        for rec in failures:
            out.write(f"MISMATCH {rec['identity']} m={rec['m']} n={rec['n']}\n"
                      f"  lhs = {rec['lhs']}\n  rhs = {rec['rhs']}\n")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# eval / fit
# ---------------------------------------------------------------------------

def cmd_eval(cfg: RunConfig, regs, out) -> int:
    if cfg.sum_kind:
        if cfg.d is None or cfg.n is None:
            raise DomainError("eval --sum needs --d and --n")
        fn = recursions.u_rec if cfg.sum_kind == "U" else recursions.v_rec
        out.write(f"{fn(cfg.d, cfg.n)}\n")
        return 0
    if not cfg.identity or not cfg.side or cfg.n is None:
        raise DomainError("eval needs --sum U|V or --identity with --side and --n")
    m = ExactParam.parse(cfg.m_spec[0]) if cfg.m_spec else None
    point = EvalPoint(m, cfg.n)
    value = (catalog.lhs_direct(cfg.identity, point, regs) if cfg.side == "lhs"
             else catalog.rhs_closed(cfg.identity, point, regs))
    out.write(f"{value}\n")
    return 0


def cmd_fit(cfg: RunConfig, regs, out) -> int:
    if cfg.d is None:
        raise DomainError("fit needs --d")
    fit = (recursions.fit_structure_u(cfg.d) if cfg.sum_kind == "U"
           else recursions.fit_structure(cfg.d))
    if cfg.fmt == "json":
        json.dump(fit.to_record(), out, indent=2)
        out.write("\n")
    else:
        rec = fit.to_record()
        out.write(f"kind = {rec['kind']}, d = {rec['d']}\n")
        out.write(f"P = [{', '.join(rec['P'])}]\n")
        if rec["Q"]:
            out.write(f"Q = [{', '.join(rec['Q'])}]\n")
        out.write(f"C = {rec['C']}\nN = {rec['N']}\n")
        out.write(f"residual_ok = {rec['residual_ok']}\n")
        if fit.diagnostic:
            out.write(f"diagnostic: {fit.diagnostic}\n")
        if fit.kind == "v" and cfg.d == 2:
            out.write("note: the quadratic multiplying the harmonic factor is "
                      "15n^2+12n-1, fixed by the direct-summation oracle "
                      "(the printed variant 15n^2+12n+1 fails already at n=1).\n")
    return 0 if fit.residual_ok else 1


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

def _time_ns(fn) -> tuple:
    t0 = time.perf_counter_ns()
    value = fn()
    return value, time.perf_counter_ns() - t0


def _bench_grid(n_max: int, n_min: int) -> list[int]:
    grid = []
    n = 16
    while n < n_max:
        if n >= max(1, n_min):
            grid.append(n)
        n *= 4
    grid.append(n_max)
    return grid


def cmd_bench(cfg: RunConfig, regs, out) -> int:
    rows = []
    if cfg.sum_kind:
        if cfg.d is None:
            raise DomainError("bench --sum needs --d")
        d_deg = cfg.d
        for n in _bench_grid(cfg.n_max, 1):
            if cfg.sum_kind == "U":
                _, t_direct = _time_ns(lambda: _direct_u(d_deg, n))
                _, t_rec = _time_ns(lambda: recursions.u_rec(d_deg, n))
                t_closed = ""
                if 1 <= d_deg <= 3:
                    _, t_closed = _time_ns(lambda: recursions.u_closed_small(d_deg, n))
            else:
                _, t_direct = _time_ns(lambda: _direct_v(d_deg, n))
                _, t_rec = _time_ns(lambda: recursions.v_rec(d_deg, n))
                t_closed = ""
                if 1 <= d_deg <= 2:
                    _, t_closed = _time_ns(lambda: recursions.v_closed_small(d_deg, n))
            speed = (f"{t_direct / t_closed:.2f}" if t_closed else
                     f"{t_direct / t_rec:.2f}")
            rows.append({"subject": f"{cfg.sum_kind}_{d_deg}", "d": d_deg, "n": n,
                         "t_direct_ns": t_direct, "t_closed_ns": t_closed,
                         "t_rec_ns": t_rec, "speedup_closed": speed})
    else:
        for desc in _select(cfg, regs):
            if desc.requires_m:
                continue            # benchmarks target the parameter-free sums
            for n in _bench_grid(cfg.n_max, desc.n_min):
                point = EvalPoint(None, n)
                _, t_lhs = _time_ns(lambda: catalog.lhs_direct(desc.id, point, regs))
                _, t_rhs = _time_ns(lambda: catalog.rhs_closed(desc.id, point, regs))
                rows.append({"subject": desc.id, "d": "", "n": n,
                             "t_direct_ns": t_lhs, "t_closed_ns": t_rhs,
                             "t_rec_ns": "",
                             "speedup_closed": f"{t_lhs / t_rhs:.2f}"})
    if cfg.fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    elif cfg.fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        out.write(f"{'subject':12s} {'n':>6s} {'direct_ns':>12s} "
                  f"{'closed_ns':>12s} {'rec_ns':>12s} {'speedup':>8s}\n")
        for row in rows:
            out.write(f"{row['subject']:12s} {row['n']:6d} "
                      f"{row['t_direct_ns']:12d} {str(row['t_closed_ns']):>12s} "
                      f"{str(row['t_rec_ns']):>12s} {row['speedup_closed']:>8s}\n")
    return 0


def _direct_u(d: int, n: int):
    from fractions import Fraction
    u = Fraction(1)
    s = Fraction(0)
    for k in range(1, n + 1):
        u *= Fraction(2 * k, 2 * k - 1)
        s += u * k ** d
    return s


def _direct_v(d: int, n: int):
    from fractions import Fraction
    u = Fraction(1)
    h = Fraction(0)
    s = Fraction(0)
    for k in range(1, n + 1):
        u *= Fraction(2 * k, 2 * k - 1)
        h += Fraction(1, k)
        s += u * k ** d * h
    return s


# ---------------------------------------------------------------------------
# list / numeric
# ---------------------------------------------------------------------------

def cmd_list(cfg: RunConfig, regs, out) -> int:
    if cfg.fmt == "json":
        records = [{
            "id": d.id, "title": d.title, "source": d.source,
            "requires_m": d.requires_m, "m_domain": d.m_domain_desc,
            "n_min": d.n_min, "ring": d.ring,
        } for d in regs]
        json.dump(records, out, indent=2)
        out.write("\n")
    else:
        for d in regs:
            m_part = f"m: {d.m_domain_desc}" if d.requires_m else "no m"
            out.write(f"{d.id:14s} {d.source:18s} ring={d.ring:9s} "
                      f"n>={d.n_min}  {m_part:14s} {d.title}\n")
    return 0


def cmd_numeric(cfg: RunConfig, regs, out) -> int:
    reports = numerics.random_suite(cfg.seed, trials=cfg.trials, tol=cfg.tol,
                                    n_max=cfg.numeric_n_max)
    deriv = [(kind, m, numerics.derivative_check(kind, m, cfg.step))
             for kind, m in (("harmonic", 2.5), ("binomial", 0.8),
                             ("identity-1.4", 1.3))]
    deriv_ok = all(dev <= 1e-5 for _, _, dev in deriv)
    failures = [r for r in reports if not r.passed]
    if cfg.fmt in ("json", "csv"):
        records = [r.to_record() for r in reports]
        _emit_records(records, cfg.fmt, out)
    else:
        out.write(f"random suite: seed={cfg.seed} trials={cfg.trials} "
                  f"tol={cfg.tol:g}  ->  "
                  f"{len(reports) - len(failures)}/{len(reports)} passed\n")
        worst = max(reports, key=lambda r: r.rel_err)
        out.write(f"worst rel_err = {worst.rel_err:.3e} "
                  f"({worst.identity}, m={worst.m:.6f}, n={worst.n})\n")
        for r in failures:
            out.write(f"FAIL {r.identity} m={r.m:.17g} n={r.n} "
                      f"lhs={r.lhs:.17g} rhs={r.rhs:.17g} rel={r.rel_err:.3e}\n")
        for kind, m, dev in deriv:
            out.write(f"derivative {kind:12s} at m={m}: max deviation {dev:.3e}\n")
    return 0 if not failures and deriv_ok else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbe",
        description="exact verification engine for harmonic / inverse "
                    "central-binomial sum identities")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"),
                       default="text")

    p = sub.add_parser("list", help="print the identity registry")
    add_common(p)

    p = sub.add_parser("verify", help="exact verification sweep")
    add_common(p)
    p.add_argument("--identity", default="all",
                   help="comma-separated identity ids, or 'all'")
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--m", dest="m_spec",
                   help="comma-separated exact parameter values, e.g. 0,1/2,3")
    p.add_argument("--no-timing", action="store_true",
                   help="zero the timing fields for byte-stable output")
    p.add_argument("--order2-half-integers", action="store_true",
                   help="widen the order-2 identity to half-integer m "
                        "(requires the trigamma cross-check to pass)")

    p = sub.add_parser("eval", help="evaluate one value")
    add_common(p)
    p.add_argument("--sum", dest="sum_kind", choices=("U", "V"))
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--identity")
    p.add_argument("--side", choices=("lhs", "rhs"))
    p.add_argument("--m", dest="m_spec")

    p = sub.add_parser("fit", help="discover the polynomial structure")
    add_common(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sum", dest="sum_kind", choices=("U", "V"), default="V")

    p = sub.add_parser("bench", help="closed form vs direct summation timings")
    add_common(p)
    p.add_argument("--identity", default="all")
    p.add_argument("--sum", dest="sum_kind", choices=("U", "V"))
    p.add_argument("--d", type=int)
    p.add_argument("--n-max", type=int, default=4096)

    p = sub.add_parser("numeric", help="seeded floating-point suites")
    add_common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--n-max", type=int, default=15)
    p.add_argument("--step", type=float, default=1e-6)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    cfg.fmt = getattr(args, "fmt", "text")
    if hasattr(args, "identity") and args.identity:
        cfg.identities = [s.strip() for s in args.identity.split(",")]
        cfg.identity = cfg.identities[0]
    if getattr(args, "m_spec", None):
        cfg.m_spec = [s.strip() for s in args.m_spec.split(",")]
    for name, attr in (("n_max", "n_max"), ("seed", "seed"),
                       ("no_timing", "no_timing"), ("d", "d"), ("n", "n"),
                       ("sum_kind", "sum_kind"), ("side", "side"),
                       ("tol", "tol"), ("trials", "trials"), ("step", "step")):
        if hasattr(args, attr) and getattr(args, attr) is not None:
            setattr(cfg, name, getattr(args, attr))
    if args.command == "numeric" and hasattr(args, "n_max"):
        cfg.numeric_n_max = args.n_max
    cfg.order2_half = getattr(args, "order2_half_integers", False)
    return cfg


def run(cfg: RunConfig, regs: Optional[Sequence[IdentityDescriptor]] = None,
        out=None) -> int:
    out = out if out is not None else sys.stdout
    if regs is None:
        regs = catalog.registry(order2_half_integers=cfg.order2_half)
    handlers = {
        "list": cmd_list,
        "verify": cmd_verify,
        "eval": cmd_eval,
        "fit": cmd_fit,
        "bench": cmd_bench,
        "numeric": cmd_numeric,
    }
    try:
        return handlers[cfg.command](cfg, regs, out)
    except (DomainError, PoleError, SingularSystemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Optional[list[str]] = None,
         regs: Optional[Sequence[IdentityDescriptor]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(config_from_args(args), regs=regs)


if __name__ == "__main__":
    sys.exit(main())
