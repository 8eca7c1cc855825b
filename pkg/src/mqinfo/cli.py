"""Command-line front end.

Subcommands:
  report       full information/identity report for one pure state
  fuzz         run an identity checker over seeded Haar-random states
  mixed-check  evaluate the mixed-state relations on random or given matrices
  bench        time the fast route against the enumeration oracle (and the
               numba kernels against the numpy fallback when available)

Exit codes: 0 all checks pass, 1 a tolerance failure, 2 input/usage error.
"""

import argparse
import itertools
import json
import sys
import time
from fractions import Fraction

import numpy as np

from . import _kernels
from .identities import (
    EQ_TOL,
    MIXED_IDENTITIES,
    PURE_IDENTITIES,
    fuzz_mixed_identity,
    fuzz_pure_identity,
    mixed_total_info_margin,
    residual_combination_4q,
    residual_complementarity,
    residual_mixed_pair,
    residual_mixed_triple,
    residual_pair_partition,
    residual_single_partition,
    residual_tangle_relation_4q,
)
from .measures import (
    all_infos_enumerated,
    all_infos_fast,
    concurrence_sq_2q,
    n_tangle,
    tau_linear_entropy,
)
from .statekit import (
    MAX_QUBITS,
    MixedState,
    PureState,
    load_state,
    make_named,
    save_state,
)


def _resolve_pure(spec):
    if spec.startswith("file:"):
        state = load_state(spec[5:])
        if not isinstance(state, PureState):
            raise ValueError(f"{spec[5:]} does not contain a pure state")
        return state
    if ":" not in spec:
        raise ValueError(f"bad state spec {spec!r}; want family:n or file:path")
    family, _, count = spec.partition(":")
    n = int(count)
    if not (1 <= n <= MAX_QUBITS):
        raise ValueError(f"qubit count {n} outside [1, {MAX_QUBITS}]")
    return make_named(family, n)


def _resolve_mixed(spec):
    if spec.startswith("file:"):
        state = load_state(spec[5:])
        if not isinstance(state, MixedState):
            raise ValueError(f"{spec[5:]} does not contain a density matrix")
        return state
    family, _, count = spec.partition(":")
    if family == "maximally-mixed":
        m = int(count)
        return MixedState(m, np.eye(2**m, dtype=np.complex128) / 2**m)
    raise ValueError(f"bad density spec {spec!r}; want maximally-mixed:m or file:path")


def _frac_hint(x):
    if abs(x) > 64:
        return ""
    fr = Fraction(x).limit_denominator(512)
    if abs(float(fr) - x) <= 1e-9:
        return f"  (= {fr})"
    return ""


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

def _build_report(psi, tol):
    n = psi.num_qubits
    table = all_infos_fast(psi)
    taus_single = {k: tau_linear_entropy(psi, (k,)) for k in range(1, n + 1)} if n >= 2 else {}
    taus_pair = (
        {p: tau_linear_entropy(psi, p) for p in itertools.combinations(range(1, n + 1), 2)}
        if n >= 4
        else {}
    )
    reports = [residual_complementarity(psi, table, tol)]
    if n >= 2:
        reports += [residual_single_partition(psi, k, table, tol) for k in range(1, n + 1)]
    if n >= 4:
        reports += [
            residual_pair_partition(psi, p, table, tol)
            for p in itertools.combinations(range(1, n + 1), 2)
        ]
    if n == 4:
        reports.append(residual_tangle_relation_4q(psi, table, tol))
        reports.append(residual_combination_4q(psi, table, tol))
    extras = {}
    if n % 2 == 0:
        extras["n_tangle"] = n_tangle(psi)
    if n == 2:
        extras["concurrence_sq"] = concurrence_sq_2q(psi)
    return table, taus_single, taus_pair, extras, reports


def _emit_report(psi, table, taus_single, taus_pair, extras, reports, fmt, out):
    if fmt == "json":
        obj = {
            "n": psi.num_qubits,
            "info_table": table.to_json_obj(),
            "I_local": table.local_total(),
            "I_nonlocal": table.nonlocal_total(),
            "tau_single": {str(k): v for k, v in taus_single.items()},
            "tau_pair": {"-".join(map(str, p)): v for p, v in taus_pair.items()},
            **extras,
            "identities": [r.to_json_obj() for r in reports],
        }
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    elif fmt == "csv":
        out.write("subset,size,I\n")
        for subset, size, val in table.to_csv_rows():
            out.write(f"{subset},{size},{val!r}\n")
    else:
        n = psi.num_qubits
        out.write(f"state on {n} qubit(s)\n\ninformation values\n")
        for subset, size, val in table.to_csv_rows():
            out.write(f"  I_{subset:<12} {val: .12g}{_frac_hint(val)}\n")
        out.write(f"\n  I_local    {table.local_total(): .12g}{_frac_hint(table.local_total())}\n")
        out.write(f"  I_nonlocal {table.nonlocal_total(): .12g}{_frac_hint(table.nonlocal_total())}\n")
        if taus_single:
            out.write("\nlinear entropies (one vs rest)\n")
            for k, v in taus_single.items():
                out.write(f"  tau_{k}(rest)   {v: .12g}{_frac_hint(v)}\n")
        if taus_pair:
            out.write("\nlinear entropies (pair vs rest)\n")
            for p, v in taus_pair.items():
                out.write(f"  tau_{p[0]}{p[1]}(rest)  {v: .12g}{_frac_hint(v)}\n")
        for key, val in extras.items():
            out.write(f"\n{key} = {val:.12g}{_frac_hint(val)}\n")
        out.write("\nidentity checks\n")
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            ctx = {k: v for k, v in r.context.items() if k != "n"}
            out.write(
                f"  [{status}] {r.identity:<22} residual {r.residual: .3e}  {ctx}\n"
            )


def cmd_report(args):
    psi = _resolve_pure(args.state)
    table, taus_single, taus_pair, extras, reports = _build_report(psi, args.tol)
    dest = open(args.out, "w") if args.out else sys.stdout
    try:
        _emit_report(psi, table, taus_single, taus_pair, extras, reports, args.format, dest)
    finally:
        if args.out:
            dest.close()
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# fuzz
# ---------------------------------------------------------------------------

def cmd_fuzz(args):
    names = list(PURE_IDENTITIES) if args.identity == "all" else [args.identity]
    summaries = []
    failed = False
    for name in names:
        if name in ("eq12", "eq26") and args.n != 4:
            if args.identity == "all":
                continue
            raise ValueError(f"{name} requires --n 4")
        if name == "eq20" and args.n < 4:
            if args.identity == "all":
                continue
            raise ValueError("eq20 requires --n >= 4")
        summary = fuzz_pure_identity(name, args.n, args.trials, args.seed, args.tol)
        summaries.append(summary)
        if not summary["passed"]:
            failed = True
            witness = args.out or f"witness_{name}_seed{summary['worst_seed']}.json"
            save_state(summary["worst_state"], witness)
            summary["witness_path"] = witness
    if args.format == "json":
        obj = [
            {
                "identity": s["identity"],
                "n": s["n"],
                "trials": s["trials"],
                "max_residual": s["max_residual"],
                "worst_seed": s["worst_seed"],
                "failures": s["failures"],
                "passed": s["passed"],
                **({"witness_path": s["witness_path"]} if "witness_path" in s else {}),
            }
            for s in summaries
        ]
        print(json.dumps(obj, sort_keys=True))
    else:
        for s in summaries:
            status = "pass" if s["passed"] else "FAIL"
            print(
                f"[{status}] {s['identity']:<6} n={s['n']} trials={s['trials']} "
                f"max|residual|={s['max_residual']:.3e} worst seed={s['worst_seed']}"
            )
            if "witness_path" in s:
                print(f"       witness state written to {s['witness_path']}")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# mixed-check
# ---------------------------------------------------------------------------

def _mixed_names_for(m):
    names = []
    if m == 2:
        names.append("eq24")
    if m == 3:
        names.append("eq25")
    if m <= 5:
        names.append("eq23")
    return names


def cmd_mixed_check(args):
    if args.random:
        failed = False
        rows = []
        for name in _mixed_names_for(args.m):
            summary = fuzz_mixed_identity(
                name, args.m, args.rank, args.trials, args.seed, args.tol
            )
            if not summary["passed"]:
                failed = True
                witness = args.out or f"witness_{name}_seed{summary['worst_seed']}.json"
                save_state(summary["worst_state"], witness)
                summary["witness_path"] = summary.get("witness_path", witness)
            rows.append(summary)
        if args.format == "json":
            obj = [
                {
                    "identity": s["identity"],
                    "m": s["m"],
                    "rank": s["rank"],
                    "trials": s["trials"],
                    "max_residual": s["max_residual"],
                    "min_margin": s["min_margin"],
                    "worst_seed": s["worst_seed"],
                    "failures": s["failures"],
                    "passed": s["passed"],
                }
                for s in rows
            ]
            print(json.dumps(obj, sort_keys=True))
        else:
            for s in rows:
                status = "pass" if s["passed"] else "FAIL"
                margin = "" if s["min_margin"] is None else f" min margin={s['min_margin']:.3e}"
                print(
                    f"[{status}] {s['identity']:<6} m={s['m']} trials={s['trials']} "
                    f"max|residual|={s['max_residual']:.3e}{margin} worst seed={s['worst_seed']}"
                )
        return 1 if failed else 0

    rho = _resolve_mixed(args.rho)
    reports = []
    if rho.num_qubits == 2:
        reports.append(residual_mixed_pair(rho, min(args.tol, 1e-10)))
    if rho.num_qubits == 3:
        reports.append(residual_mixed_triple(rho, args.tol))
    if rho.num_qubits <= 5:
        reports.append(mixed_total_info_margin(rho, args.tol))
    if args.format == "json":
        print(json.dumps([r.to_json_obj() for r in reports], sort_keys=True))
    else:
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            print(
                f"[{status}] {r.identity:<16} lhs={r.lhs:.12g} rhs={r.rhs:.12g} "
                f"residual={r.residual: .3e}"
            )
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

def cmd_bench(args):
    from .statekit import random_pure

    psi = random_pure(args.n, args.seed)
    t0 = time.perf_counter()
    fast = all_infos_fast(psi)
    t_fast = time.perf_counter() - t0
    lines = [f"fast route        n={args.n}: {t_fast * 1e3:.2f} ms"]
    code = 0
    if args.n <= 6:
        t0 = time.perf_counter()
        enum = all_infos_enumerated(psi)
        t_enum = time.perf_counter() - t0
        worst = max(
            abs(fast.entries[s] - enum.entries[s]) for s in fast.entries
        )
        lines.append(f"enumeration route n={args.n}: {t_enum * 1e3:.2f} ms")
        lines.append(f"speedup: {t_enum / t_fast:.1f}x, max entry diff {worst:.3e}")
        if worst > 1e-9:
            code = 1
    else:
        lines.append("enumeration route skipped (n > 6)")
    if _kernels.HAVE_NUMBA:
        # kernel backend comparison on a batch of full-support expectations
        from .pauli import expectation_pure, strings_on_support

        strings = strings_on_support(args.n, tuple(range(1, args.n + 1)))[:243]
        amps = psi.amplitudes
        _kernels.expect_pure_numba(amps, strings[0].x_mask, strings[0].z_mask)  # warm up
        t0 = time.perf_counter()
        for p in strings:
            _kernels.expect_pure_numba(amps, p.x_mask, p.z_mask)
        t_nb = time.perf_counter() - t0
        t0 = time.perf_counter()
        for p in strings:
            _kernels.expect_pure_numpy(amps, p.x_mask, p.z_mask)
        t_np = time.perf_counter() - t0
        lines.append(
            f"kernel backends ({len(strings)} expectations): "
            f"numba {t_nb * 1e3:.2f} ms, numpy {t_np * 1e3:.2f} ms"
        )
    else:
        lines.append(f"kernel backend: {_kernels.BACKEND} only")
    print("\n".join(lines))
    return code


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="mqinfo",
        description="Multi-qubit information measures and monogamy identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="full report for one pure state")
    rep.add_argument("--state", required=True, help="family:n (ghz, w, basis-product, bell-phi-plus) or file:path")
    rep.add_argument("--format", choices=("table", "json", "csv"), default="table")
    rep.add_argument("--tol", type=float, default=EQ_TOL)
    rep.add_argument("--out", default=None)
    rep.set_defaults(func=cmd_report)

    fz = sub.add_parser("fuzz", help="identity fuzzing over Haar-random states")
    fz.add_argument("--n", type=int, required=True)
    fz.add_argument("--trials", type=int, default=100)
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--tol", type=float, default=EQ_TOL)
    fz.add_argument(
        "--identity", default="all", choices=("all",) + PURE_IDENTITIES
    )
    fz.add_argument("--format", choices=("table", "json"), default="table")
    fz.add_argument("--out", default=None, help="witness state path on failure")
    fz.set_defaults(func=cmd_fuzz)

    mx = sub.add_parser("mixed-check", help="mixed-state relation checks")
    mx.add_argument("--rho", default=None, help="maximally-mixed:m or file:path")
    mx.add_argument("--random", action="store_true")
    mx.add_argument("--m", type=int, default=2)
    mx.add_argument("--rank", type=int, default=None)
    mx.add_argument("--trials", type=int, default=100)
    mx.add_argument("--seed", type=int, default=0)
    mx.add_argument("--tol", type=float, default=EQ_TOL)
    mx.add_argument("--format", choices=("table", "json"), default="table")
    mx.add_argument("--out", default=None)
    mx.set_defaults(func=cmd_mixed_check)

    bn = sub.add_parser("bench", help="time fast route vs enumeration oracle")
    bn.add_argument("--n", type=int, required=True)
    bn.add_argument("--seed", type=int, default=0)
    bn.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "mixed-check" and not args.random and args.rho is None:
        parser.error("mixed-check needs --rho or --random")
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
