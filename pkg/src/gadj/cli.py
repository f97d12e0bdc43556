"""Command line interface: ``gadj run | sweep | verify | bench``.

Exit codes: 0 success, 1 a verification or cross-check failed, 2 bad usage
or input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from gadj import _kernels, cartan, dj, quantum, verify
from gadj.multivector import Multivector, geometric_product, scalar_of_product

GA_MAX_N = 20
FULL_MAX_N = 12
SHOW_MATRIX_MAX_N = 3
SWEEP_ALL_MAX_N = 3
AGREEMENT_TOL = 1e-9


class UsageError(Exception):
    pass


def _num(x):
    """Render exact integers without a trailing ``.0``."""
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return x


# -- function specs ----------------------------------------------------------


def read_table_file(path: str | Path) -> str:
    """Truth-table file: '#' comment lines, then one line of 0/1 characters."""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read truth table {path}: {exc.strerror}") from None
    body = [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if len(body) != 1:
        raise UsageError(f"{path}: expected exactly one table line, found {len(body)}")
    return body[0]


def parse_function(spec: str, n: int | None) -> dj.BooleanFunction:
    """``const0 | const1 | parity | majority | table:BITS | file:PATH``."""
    builtins = {
        "const0": lambda k: dj.BooleanFunction.constant(k, 0),
        "const1": lambda k: dj.BooleanFunction.constant(k, 1),
        "parity": dj.BooleanFunction.parity,
        "majority": dj.BooleanFunction.majority,
    }
    if spec in builtins:
        if n is None:
            raise UsageError(f"--n is required for builtin function {spec!r}")
        return builtins[spec](n)
    if spec.startswith("table:"):
        bits = spec[len("table:"):]
    elif spec.startswith("file:"):
        bits = read_table_file(spec[len("file:"):])
    elif Path(spec).is_file():
        bits = read_table_file(spec)
    else:
        raise UsageError(f"unknown function spec {spec!r}")
    if n is not None and len(bits) != 1 << n:
        raise UsageError(f"truth table has {len(bits)} entries, n={n} needs {1 << n}")
    try:
        return dj.BooleanFunction.from_string(bits)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def resolve_rep(name: str | None, m: int) -> cartan.RepKind:
    if name is None:
        return cartan.RepKind.default_for(m)
    if name == "cartan":
        return cartan.RepKind.CARTAN
    try:
        return cartan.RepKind.pauli_for(m)
    except cartan.InvalidRepresentationError as exc:
        raise UsageError(f"--rep pauli: {exc}") from None


# -- reports -----------------------------------------------------------------


@dataclass
class RunReport:
    n: int
    m: int
    N: int
    rep_kind: str
    scalar: float
    trace_value: float
    classification: str
    sign: int | None
    ga_quantum_agreement: bool | None
    quantum_amplitude: float | None
    wall_time_ns: int

    def to_dict(self) -> dict:
        return {k: _num(v) for k, v in asdict(self).items()}


def _render(d: dict) -> str:
    def fmt(v):
        if v is None:
            return "-"
        if isinstance(v, bool):
            return str(v).lower()
        if isinstance(v, int) and not isinstance(v, bool):
            return str(v)
        return repr(v) if isinstance(v, float) else str(v)

    return " ".join(f"{k}={fmt(v)}" for k, v in sorted(d.items()))


def _emit(obj: dict, as_json: bool) -> None:
    print(json.dumps(obj, sort_keys=True) if as_json else _render(obj))


def evaluate(f: dj.BooleanFunction, kind: cartan.RepKind, *, cross_check: bool, full: bool = False) -> RunReport:
    t0 = time.perf_counter_ns()
    res = dj.run(f, kind, full=full)
    amp = agree = None
    if cross_check:
        amp = quantum.dj_reference(f)
        agree = abs(amp - res.scalar / (1 << f.n)) <= AGREEMENT_TOL
    wall = time.perf_counter_ns() - t0
    return RunReport(
        n=f.n,
        m=f.n + 1,
        N=res.N,
        rep_kind=res.rep_kind.value,
        scalar=res.scalar,
        trace_value=res.trace_value,
        classification=res.classification.value,
        sign=res.sign,
        ga_quantum_agreement=agree,
        quantum_amplitude=amp,
        wall_time_ns=wall,
    )


# -- run ---------------------------------------------------------------------


def _pipeline_matrices(f: dj.BooleanFunction, kind: cartan.RepKind) -> dict[str, np.ndarray]:
    n = f.n
    e = dj.build_superposition(n)
    seeded = geometric_product(e, Multivector.from_blade(dj.seed_blade(n)))
    z = dj.apply_oracle(f, seeded)
    rev = dj.build_reversal_operator(n)
    seed = dj.seed_blade(n)
    return {
        f"E_{n + 1}": cartan.represent(e, kind),
        f"E_{n + 1} {seed}": cartan.represent(seeded, kind),
        f"E_f E_{n + 1} {seed}": cartan.represent(z, kind),
        f"F_{n + 1}": cartan.represent(rev, kind),
        f"F_{n + 1} E_f E_{n + 1} {seed}": cartan.represent(rev, kind) @ cartan.represent(z, kind),
    }


def cmd_run(args) -> int:
    if args.n is not None and not 1 <= args.n <= GA_MAX_N:
        raise UsageError(f"--n must be in 1..{GA_MAX_N}")
    f = parse_function(args.f, args.n)
    if not 1 <= f.n <= GA_MAX_N:
        raise UsageError(f"n must be in 1..{GA_MAX_N}, got {f.n}")
    if args.full and f.n > FULL_MAX_N:
        raise UsageError(f"--full supports n <= {FULL_MAX_N}")
    if args.show_matrix and f.n > SHOW_MATRIX_MAX_N:
        raise UsageError(f"--show-matrix supports n <= {SHOW_MATRIX_MAX_N}")
    kind = resolve_rep(args.rep, f.n + 1)
    report = evaluate(f, kind, cross_check=args.cross_check, full=args.full)
    out = report.to_dict()
    mats = None
    if args.show_matrix:
        mats = _pipeline_matrices(f, kind)
        last = list(mats.values())[-1]
        out["matrix_trace"] = _num(cartan.trace_projection(last))
    if args.json:
        if mats is not None:
            out["matrices"] = {
                name: cartan.format_matrix(mat).split("\n") for name, mat in mats.items()
            }
        _emit(out, True)
    else:
        _emit(out, False)
        if mats is not None:
            for name, mat in mats.items():
                print(f"\n{name} =")
                print(cartan.format_matrix(mat))
    if report.ga_quantum_agreement is False:
        return 1
    if mats is not None and abs(out["matrix_trace"] - report.trace_value) > AGREEMENT_TOL:
        return 1
    return 0


# -- sweep -------------------------------------------------------------------


def _sweep_one(job: tuple[int, dj.BooleanFunction, str | None]) -> dict:
    index, f, rep = job
    report = evaluate(f, resolve_rep(rep, f.n + 1), cross_check=True)
    rec = {"index": index}
    if f.n <= 6:
        rec["table"] = f.to_string()
    rec.update(report.to_dict())
    del rec["wall_time_ns"]
    return rec


def _sweep_jobs(args):
    if args.all:
        if not 1 <= args.n <= SWEEP_ALL_MAX_N:
            raise UsageError(f"--all enumerates 2**(2**n) functions; n must be in 1..{SWEEP_ALL_MAX_N}")
        return [(i, f, args.rep) for i, f in enumerate(dj.all_functions(args.n))]
    if not 1 <= args.n <= GA_MAX_N:
        raise UsageError(f"--n must be in 1..{GA_MAX_N}")
    rng = np.random.default_rng(args.seed)
    funcs = [dj.BooleanFunction.constant(args.n, 0), dj.BooleanFunction.constant(args.n, 1)]
    funcs += [dj.BooleanFunction.random_balanced(args.n, rng) for _ in range(args.samples)]
    return [(i, f, args.rep) for i, f in enumerate(funcs)]


def cmd_sweep(args) -> int:
    jobs = _sweep_jobs(args)
    resolve_rep(args.rep, args.n + 1)
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            records = list(pool.map(_sweep_one, jobs, chunksize=max(1, len(jobs) // (4 * args.workers))))
    else:
        records = [_sweep_one(job) for job in jobs]
    counts = {c.value: 0 for c in dj.Classification}
    disagreements = 0
    for rec in records:
        counts[rec["classification"]] += 1
        disagreements += not rec["ga_quantum_agreement"]
        _emit(rec, args.json)
    summary = {"summary": True, "n": args.n, "total": len(records), **counts, "disagreements": disagreements}
    _emit(summary, args.json)
    return 1 if disagreements else 0


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    if not 1 <= args.m <= cartan.CARTAN_MAX_M:
        raise UsageError(f"--m must be in 1..{cartan.CARTAN_MAX_M}")
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    product = verify.flipped_product if args.inject_sign_flip else verify.blade_product
    tallies = verify.run_checks(args.m, args.trials, args.seed, product=product)
    failed = sum(t.failed for t in tallies.values())
    for name, t in tallies.items():
        rec = {"check": name, "passed": t.passed, "failed": t.failed}
        if t.first_failure:
            rec["first_failure"] = t.first_failure
        _emit(rec, args.json)
    _emit({"summary": True, "m": args.m, "trials": args.trials, "seed": args.seed, "failed": failed,
           "status": "fail" if failed else "pass"}, args.json)
    return 1 if failed else 0


# -- bench -------------------------------------------------------------------


def _timed(fn, *a, **kw):
    t0 = time.perf_counter_ns()
    out = fn(*a, **kw)
    return out, time.perf_counter_ns() - t0


def bench_pipeline(f: dj.BooleanFunction, mode: str) -> dict:
    """Time each pipeline stage with the active kernel backend."""
    n = f.n
    e, t_e = _timed(dj.build_superposition, n)
    seed = Multivector.from_blade(dj.seed_blade(n))
    seeded, t_seed = _timed(geometric_product, e, seed)
    z, t_oracle = _timed(dj.apply_oracle, f, seeded)
    rev, t_rev = _timed(dj.build_reversal_operator, n)
    if mode == "full":
        prod, t_read = _timed(geometric_product, rev, z)
        scalar = prod.scalar_part()
        readout_products = len(rev) * len(z)
    else:
        scalar, t_read = _timed(scalar_of_product, rev, z)
        readout_products = min(len(rev), len(z))
    stages = {
        "superposition_ns": t_e,
        "seed_product_ns": t_seed,
        "oracle_ns": t_oracle,
        "reversal_ns": t_rev,
        "readout_ns": t_read,
    }
    return {
        "scalar": scalar,
        "blade_products": len(e) * len(seed) + readout_products,
        "readout_blade_products": readout_products,
        "total_ns": sum(stages.values()),
        **stages,
    }


def cmd_bench(args) -> int:
    limit = FULL_MAX_N if args.mode == "full" else GA_MAX_N
    if not 1 <= args.n <= limit:
        raise UsageError(f"--n must be in 1..{limit} for --mode {args.mode}")
    if args.backend in ("auto", "all"):
        backends = _kernels.available() if args.backend == "all" else [_kernels.active().NAME]
    else:
        if args.backend not in _kernels.available():
            raise UsageError(f"kernel backend {args.backend!r} is not available")
        backends = [args.backend]
    f = dj.BooleanFunction.random(args.n, np.random.default_rng(args.seed)) if args.f is None else parse_function(args.f, args.n)
    modes = ["scalar-only", "full"] if args.mode == "full" else ["scalar-only"]

    rows = []
    for backend in backends:
        with _kernels.use_backend(backend):
            for mode in modes:
                best = None
                for _ in range(max(1, args.repeat)):
                    row = bench_pipeline(f, mode)
                    if best is None or row["total_ns"] < best["total_ns"]:
                        best = row
                rows.append({"backend": backend, "mode": mode, "n": args.n, **best})
            amp, t_q = _timed(quantum.dj_reference, f)
            rows.append({"backend": backend, "mode": "quantum-ref", "n": args.n,
                         "scalar": amp * (1 << args.n), "total_ns": t_q})

    expected = f.signed_sum()
    ok = all(r["scalar"] == expected for r in rows if r["mode"] != "quantum-ref") and all(
        abs(r["scalar"] - expected) <= AGREEMENT_TOL * (1 << args.n) for r in rows if r["mode"] == "quantum-ref"
    )
    if args.json:
        for r in rows:
            _emit({k: _num(v) for k, v in r.items()}, True)
        _emit({"summary": True, "agreement": ok, "expected_scalar": expected}, True)
    else:
        header = f"{'backend':<9} {'mode':<12} {'scalar':>10} {'products':>12} {'total ms':>10}"
        print(header)
        print("-" * len(header))
        for r in rows:
            prods = r.get("blade_products", "-")
            print(f"{r['backend']:<9} {r['mode']:<12} {_num(round(r['scalar'], 9)):>10} {prods:>12} {r['total_ns'] / 1e6:>10.3f}")
        print(f"agreement={str(ok).lower()} expected_scalar={expected}")
    return 0 if ok else 1


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gadj", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="classify one Boolean function with the GA pipeline")
    p.add_argument("--n", type=int, help="input bit count (the algebra has n+1 generators)")
    p.add_argument("--f", required=True, help="const0 | const1 | parity | majority | table:BITS | file:PATH")
    p.add_argument("--rep", choices=["pauli", "cartan"], help="matrix representation used for N (default: pauli when n<=2)")
    p.add_argument("--show-matrix", action="store_true", help="print the pipeline's matrix images (n<=3)")
    p.add_argument("--cross-check", action="store_true", help="also run the state-vector reference")
    p.add_argument("--full", action="store_true", help="form the whole final product instead of its scalar part")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("sweep", help="run a family of functions with quantum cross-checks")
    p.add_argument("--n", type=int, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--all", action="store_true", help="every Boolean function of n bits (n<=3)")
    grp.add_argument("--promise", action="store_true", help="both constants plus sampled balanced functions")
    p.add_argument("--samples", type=int, default=8, help="balanced samples for --promise")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rep", choices=["pauli", "cartan"])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="randomized algebra-law checks")
    p.add_argument("--m", type=int, required=True, help="largest generator count to sample (<=12)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--inject-sign-flip", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the pipeline stages per kernel backend")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["scalar-only", "full"], default="scalar-only")
    p.add_argument("--backend", choices=["auto", "compiled", "python", "all"], default="auto")
    p.add_argument("--f", help="function spec (default: random table from --seed)")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gadj {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
