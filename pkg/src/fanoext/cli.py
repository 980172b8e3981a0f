"""Command-line front end: single-point reports, CSV sweeps, oracle checks.

Exit codes: 0 success, 2 bad arguments, 3 verification failure, 4 I/O
failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence, TextIO

import numpy as np

from . import __version__
from .bounds import BoundReport, qsc_bound_report, qsc_capacity_per_symbol
from .channel_oracle import (
    RNG_ALGORITHM,
    BudgetExceededError,
    EnumerationBudget,
    exact_conditional_entropy,
    exact_mutual_info,
    hamming_distance_distribution,
    load_dmc,
    monte_carlo_error_histogram,
    qsc_spec,
)
from .error_model import qsc_error_distribution
from .bounds import ext_fano_ub, qsc_exact_conditional_entropy

EXIT_OK = 0
EXIT_BAD_ARGS = 2
EXIT_VERIFY_FAILED = 3
EXIT_IO = 4

#: Fixed CSV schema; the column order is the contract with the plotting tool.
CSV_COLUMNS = (
    "n",
    "q",
    "eps",
    "p_b",
    "p_s",
    "h_exact",
    "h_ext_ub",
    "h_fano_ub",
    "i_exact",
    "i_ext_lb",
    "i_fano_lb",
    "logm_ext_ub",
    "logm_fano_ub",
)

_ENUM_TOL = 1e-9


def _fmt(value) -> str:
    if isinstance(value, int):
        return str(value)
    return format(value, ".12g")


def _thread_count() -> int:
    raw = os.environ.get("FANO_EXT_THREADS", "1")
    try:
        count = int(raw)
    except ValueError:
        count = 1
    return max(1, count)


def _evaluate_grid(configs: Sequence[tuple[int, int, float]], eps_fraction: float):
    """Compute bound reports over a grid, optionally in parallel.

    Rows come back in grid order regardless of evaluation order.
    """
    threads = _thread_count()
    work = lambda cfg: qsc_bound_report(cfg[0], cfg[1], cfg[2], eps_fraction)
    if threads == 1 or len(configs) <= 1:
        return [work(cfg) for cfg in configs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(work, configs))


def _write_csv(rows: Iterable[BoundReport], stream: TextIO, metadata: list[str]):
    for line in metadata:
        stream.write(f"# {line}\n")
    stream.write(",".join(CSV_COLUMNS) + "\n")
    for r in rows:
        record = (
            r.n, r.q, r.eps, r.p_b, r.p_s,
            r.h_exact, r.h_ext_ub, r.h_fano_ub,
            r.i_exact, r.i_ext_lb, r.i_fano_lb,
            r.logm_ext_ub, r.logm_fano_ub,
        )
        stream.write(",".join(_fmt(v) for v in record) + "\n")


def _emit_table(rows, out_path, metadata) -> int:
    if out_path is None:
        _write_csv(rows, sys.stdout, metadata)
    else:
        try:
            with open(out_path, "w") as fh:
                _write_csv(rows, fh, metadata)
        except OSError as exc:
            print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"wrote {len(rows)} rows to {out_path}", file=sys.stderr)
    return EXIT_OK


def _cmd_report(args) -> int:
    r = qsc_bound_report(args.n, args.q, args.eps, args.eps_fraction)
    print(f"QSC report: q={r.q} eps={_fmt(r.eps)} n={r.n}")
    print(f"  p_b          = {_fmt(r.p_b)}")
    print(f"  p_s          = {_fmt(r.p_s)}")
    print(f"  h_exact      = {_fmt(r.h_exact)} bits")
    print(f"  h_ext_ub     = {_fmt(r.h_ext_ub)} bits")
    print(f"  h_rel_form   = {_fmt(r.h_rel_form)} bits")
    print(f"  h_cor1_ub    = {_fmt(r.h_cor1_ub)} bits")
    print(f"  h_fano_ub    = {_fmt(r.h_fano_ub)} bits")
    print(f"  i_exact      = {_fmt(r.i_exact)} bits")
    print(f"  i_ext_lb     = {_fmt(r.i_ext_lb)} bits")
    print(f"  i_cor4_lb    = {_fmt(r.i_cor4_lb)} bits")
    print(f"  i_fano_lb    = {_fmt(r.i_fano_lb)} bits")
    print(f"  logm_ext_ub  = {_fmt(r.logm_ext_ub)} bits")
    print(f"  logm_fano_ub = {_fmt(r.logm_fano_ub)} bits")
    return EXIT_OK


def _cmd_sweep_n(args, parser) -> int:
    if not 1 <= args.n_min <= args.n_max:
        parser.error(f"need 1 <= n-min <= n-max, got {args.n_min}..{args.n_max}")
    if args.n_step < 1:
        parser.error(f"n-step must be >= 1, got {args.n_step}")
    configs = [
        (n, args.q, args.eps)
        for n in range(args.n_min, args.n_max + 1, args.n_step)
    ]
    rows = _evaluate_grid(configs, args.eps_fraction)
    metadata = [
        f"fanoext {__version__}",
        f"sweep-n q={args.q} eps={_fmt(args.eps)} "
        f"n={args.n_min}..{args.n_max} step={args.n_step} "
        f"eps-fraction={_fmt(args.eps_fraction)}",
    ]
    return _emit_table(rows, args.out, metadata)


def _eps_grid(args, parser) -> list[float]:
    q = args.q
    if not 0.0 <= args.eps_min <= args.eps_max <= 1.0 / (q - 1):
        parser.error(
            f"need 0 <= eps-min <= eps-max <= 1/(q-1), got "
            f"{args.eps_min!r}..{args.eps_max!r} for q={q}"
        )
    if args.steps < 1:
        parser.error(f"steps must be >= 1, got {args.steps}")
    if args.steps == 1 or args.eps_min == args.eps_max:
        return [args.eps_min]
    if args.grid == "geometric":
        if args.eps_min <= 0.0:
            parser.error("geometric grid needs eps-min > 0")
        return list(np.geomspace(args.eps_min, args.eps_max, args.steps))
    return list(np.linspace(args.eps_min, args.eps_max, args.steps))


def _cmd_sweep_eps(args, parser) -> int:
    grid = _eps_grid(args, parser)
    configs = [(args.n, args.q, eps) for eps in grid]
    rows = _evaluate_grid(configs, args.eps_fraction)
    metadata = [
        f"fanoext {__version__}",
        f"sweep-eps q={args.q} n={args.n} "
        f"eps={_fmt(args.eps_min)}..{_fmt(args.eps_max)} steps={args.steps} "
        f"grid={args.grid} eps-fraction={_fmt(args.eps_fraction)}",
    ]
    return _emit_table(rows, args.out, metadata)


def _print_checks(checks: list[tuple[str, float, float]], tol_label: str) -> bool:
    ok = True
    for name, delta, tol in checks:
        passed = delta <= tol
        ok = ok and passed
        status = "PASS" if passed else "FAIL"
        print(f"  [{status}] {name}: |delta| = {delta:.3e} (tol {tol:.3e})")
    print(f"verification {'PASSED' if ok else 'FAILED'} ({tol_label})")
    return ok


def _verify_full_enum(args) -> int:
    budget = EnumerationBudget(max_pairs=args.budget)
    if args.matrix:
        spec = load_dmc(args.matrix)
        try:
            h1 = exact_conditional_entropy(spec, 1, budget)
            hn = exact_conditional_entropy(spec, args.n, budget)
            dist = hamming_distance_distribution(spec, args.n, budget)
        except BudgetExceededError as exc:
            print(f"error: {exc}; try --mode monte-carlo", file=sys.stderr)
            return EXIT_BAD_ARGS
        ext = ext_fano_ub(dist, spec.q)
        checks = [
            ("memoryless factorization H_n vs n*H_1", abs(hn - args.n * h1), _ENUM_TOL),
            ("extended bound dominates exact H(X|Y)", max(0.0, hn - ext), _ENUM_TOL),
        ]
        return EXIT_OK if _print_checks(checks, "full enumeration") else EXIT_VERIFY_FAILED

    spec = qsc_spec(args.q, args.eps)
    try:
        dist_oracle = hamming_distance_distribution(spec, args.n, budget)
        h_oracle = exact_conditional_entropy(spec, args.n, budget)
        i_oracle = exact_mutual_info(spec, args.n, budget)
    except BudgetExceededError as exc:
        print(f"error: {exc}; try --mode monte-carlo", file=sys.stderr)
        return EXIT_BAD_ARGS
    dist_formula = qsc_error_distribution(args.n, args.q, args.eps)
    max_bin = max(
        abs(a - b) for a, b in zip(dist_oracle.probs, dist_formula.probs)
    )
    checks = [
        ("Hamming-distance law, enum vs binomial formula", max_bin, _ENUM_TOL),
        (
            "H(X|Y), enum vs closed form",
            abs(h_oracle - qsc_exact_conditional_entropy(args.n, args.q, args.eps)),
            _ENUM_TOL,
        ),
        (
            "H(X|Y), enum vs extended bound (tightness)",
            abs(h_oracle - ext_fano_ub(dist_formula, args.q)),
            _ENUM_TOL,
        ),
        (
            "I(X;Y), enum vs n * per-symbol capacity",
            abs(i_oracle - args.n * qsc_capacity_per_symbol(args.q, args.eps)),
            _ENUM_TOL,
        ),
    ]
    return EXIT_OK if _print_checks(checks, "full enumeration") else EXIT_VERIFY_FAILED


def _verify_monte_carlo(args) -> int:
    if args.matrix:
        spec = load_dmc(args.matrix)
        q = spec.q
    else:
        spec = qsc_spec(args.q, args.eps)
        q = args.q
    print(f"rng: {RNG_ALGORITHM} seed={args.seed} trials={args.trials}")
    counts = monte_carlo_error_histogram(spec, args.n, args.trials, args.seed)
    if args.matrix:
        # no closed form to compare against for a general DMC; just report
        print(f"histogram: {counts}")
        return EXIT_OK
    expected = qsc_error_distribution(args.n, q, args.eps)
    checks = []
    for k, pk in enumerate(expected.probs):
        freq = counts[k] / args.trials
        sigma = math.sqrt(max(pk * (1.0 - pk), 1e-300) / args.trials)
        checks.append((f"bin {k} frequency vs p_{k}", abs(freq - pk), 3.0 * sigma))
    pb = 1.0 - expected.probs[0]
    pb_emp = 1.0 - counts[0] / args.trials
    sigma_b = math.sqrt(max(pb * (1.0 - pb), 1e-300) / args.trials)
    checks.append(("block error probability vs 1-(1-p_e)^n", abs(pb_emp - pb), 3.0 * sigma_b))
    return EXIT_OK if _print_checks(checks, "Monte Carlo, 3 sigma") else EXIT_VERIFY_FAILED


def _add_common_qsc(parser, need_n=True):
    parser.add_argument("--q", type=int, required=True, help="alphabet size (>= 2)")
    if need_n:
        parser.add_argument("--n", type=int, required=True, help="blocklength")
    parser.add_argument(
        "--eps-fraction",
        type=float,
        default=0.5,
        help="fraction of P_s / P_b fed to the codebook bounds (default 0.5)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanoext",
        description="Finite-blocklength coding bounds for q-ary symmetric channels",
    )
    parser.add_argument("--version", action="version", version=f"fanoext {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="all bounds for one (q, eps, n)")
    _add_common_qsc(p_report)
    p_report.add_argument("--eps", type=float, required=True, help="crossover probability")

    p_sn = sub.add_parser("sweep-n", help="CSV sweep over blocklength")
    _add_common_qsc(p_sn, need_n=False)
    p_sn.add_argument("--eps", type=float, required=True)
    p_sn.add_argument("--n-min", type=int, default=1)
    p_sn.add_argument("--n-max", type=int, default=100)
    p_sn.add_argument("--n-step", type=int, default=1)
    p_sn.add_argument("--out", default=None, help="output CSV path (default stdout)")

    p_se = sub.add_parser("sweep-eps", help="CSV sweep over crossover probability")
    _add_common_qsc(p_se)
    p_se.add_argument("--eps-min", type=float, required=True)
    p_se.add_argument("--eps-max", type=float, required=True)
    p_se.add_argument("--steps", type=int, default=50)
    p_se.add_argument("--grid", choices=("linear", "geometric"), default="linear")
    p_se.add_argument("--out", default=None, help="output CSV path (default stdout)")

    p_v = sub.add_parser("verify", help="check formulas against the channel oracle")
    p_v.add_argument("--q", type=int, default=2)
    p_v.add_argument("--eps", type=float, default=0.0)
    p_v.add_argument("--n", type=int, required=True)
    p_v.add_argument("--mode", choices=("full-enum", "monte-carlo"), default="full-enum")
    p_v.add_argument("--trials", type=int, default=10**6)
    p_v.add_argument("--seed", type=int, default=0)
    p_v.add_argument("--budget", type=int, default=10**8, help="max codeword pairs for enumeration")
    p_v.add_argument("--matrix", default=None, help="plain-text DMC matrix file instead of a QSC")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "report":
            return _cmd_report(args)
        if args.command == "sweep-n":
            return _cmd_sweep_n(args, parser)
        if args.command == "sweep-eps":
            return _cmd_sweep_eps(args, parser)
        if args.command == "verify":
            if args.mode == "monte-carlo":
                return _verify_monte_carlo(args)
            return _verify_full_enum(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    raise AssertionError(f"unhandled command {args.command!r}")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
