"""Command-line front end: regenerate the figure data as CSV and run self-checks.

    hermsc psi-norms   [--n 1:60] [--k 0,1,2,3]
    hermsc supercon    --function pole --n 55 --m 1 [--ratios]
    hermsc collocate   --model model1 --alpha 1/2 --function pole2 --n 45
    hermsc postprocess --alpha 1 --function twingauss --n 90 --m 91
    hermsc verify      --suite all

Exit codes: 0 success, 1 verification failure, 2 argument error,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import __version__
from .basis import norm_exponent, sup_norm_estimate
from .collocation import MODELS, CollocationProblem, solve
from .errors import CapabilityError, HermscError, InputError, NumericalError
from .functions import FUNCTIONS, get_function
from .interpolation import (approximation_error_curve, error_curve, marked_points,
                            ratio_series)
from .output import RunManifest, write_csv, write_json
from .postprocess import run_postprocess
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_ARGS, EXIT_NUMERIC = 0, 1, 2, 3


def parse_range(text):
    """'7' -> [7]; 'a:b' -> a..b inclusive; 'a:b:s' with step s."""
    try:
        parts = [int(p) for p in str(text).split(":")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if len(parts) == 1:
        return parts
    if len(parts) in (2, 3):
        step = parts[2] if len(parts) == 3 else 1
        if step < 1 or parts[1] < parts[0]:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        return list(range(parts[0], parts[1] + 1, step))
    raise argparse.ArgumentTypeError(f"bad range {text!r}")


def parse_alpha(text):
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad alpha {text!r}") from None


def _workers(args):
    return args.workers or min(8, os.cpu_count() or 1)


def _finish(args, stem, params, outputs, t0, **extra):
    manifest = RunManifest(args.command, params, [str(p) for p in outputs],
                           time.perf_counter() - t0, extra=extra)
    path = manifest.write(Path(args.out_dir) / f"{stem}.manifest.json")
    for p in outputs:
        print(p)
    print(path)
    return EXIT_OK


def cmd_psi_norms(args):
    t0 = time.perf_counter()
    ns = args.n or list(range(1, 61))
    ks = [int(k) for k in args.k.split(",")]
    if any(k not in (0, 1, 2, 3) for k in ks):
        raise InputError("k must be a subset of {0,1,2,3}")
    if min(ns) < 1:
        raise InputError("psi-norms needs n >= 1")
    cells = [(n, k) for k in ks for n in ns]
    with ThreadPoolExecutor(_workers(args)) as pool:
        sups = list(pool.map(lambda c: sup_norm_estimate(*c), cells))
    rows = [(n, k, s, s * n ** (-norm_exponent(k))) for (n, k), s in zip(cells, sups)]
    out = write_csv(Path(args.out_dir) / "psi_norms.csv", ["n", "k", "sup_norm", "scaled"], rows)
    return _finish(args, "psi_norms", {"n": ns, "k": ks}, [out], t0)


def _curve_files(out_dir, stem, curve):
    c = write_csv(Path(out_dir) / f"{stem}_curve.csv", ["x", "error"],
                  zip(curve.abscissae, curve.values))
    m = write_csv(Path(out_dir) / f"{stem}_marks.csv", ["point", "kind", "error"],
                  ((p, curve.mark_kind, e) for p, e in zip(curve.mark_points, curve.mark_errors)))
    return [c, m]


def cmd_supercon(args):
    t0 = time.perf_counter()
    f = get_function(args.function or "pole")
    params = {"function": f.name, "grid_points": args.grid_points, "window_pad": args.window_pad}
    if args.ratios:
        ns = args.n or list(range(1, 201))
        rs = ratio_series(f, ns, args.grid_points, args.window_pad, workers=_workers(args))
        stem = f"supercon_{f.name}_ratios"
        rows = [(e.n, e.r1, e.r2, e.sqrt_n_r1, e.sqrt_n_r2, e.degenerate) for e in rs.entries]
        out = write_csv(Path(args.out_dir) / f"{stem}.csv",
                        ["n", "R1", "R2", "sqrt_n_R1", "sqrt_n_R2", "degenerate"], rows)
        params["n"] = ns
        return _finish(args, stem, params, [out], t0)
    n = _single(args.n, 55)
    m = args.m if args.m is not None else 1
    if m not in (1, 2):
        raise InputError("supercon needs --m 1 or 2")
    curve = error_curve(f, m, n, args.grid_points, args.window_pad)
    stem = f"supercon_{f.name}_n{n}_m{m}"
    outs = _curve_files(args.out_dir, stem, curve)
    params.update(n=n, m=m)
    return _finish(args, stem, params, outs, t0, sup_error=curve.sup_estimate,
                   marked_max=curve.marked_max, marks=int(curve.mark_points.size))


def _single(ns, default):
    if not ns:
        return default
    if len(ns) != 1:
        raise InputError("this command takes a single --n")
    return ns[0]


def cmd_collocate(args):
    t0 = time.perf_counter()
    f = get_function(args.function or "pole2")
    n = _single(args.n, 45)
    model = args.model or "model1"
    alpha = args.alpha if args.alpha is not None else 0.5
    sol = solve(CollocationProblem(model, alpha, f.model_rhs(model, alpha), n))
    stem = f"collocate_{model}_{f.name}_n{n}"
    outs, ratios = [], {}
    for m in (0, 1):
        curve = approximation_error_curve(sol.expansion, f, m, n, args.grid_points,
                                          args.window_pad, marks=marked_points(n, m))
        outs += _curve_files(args.out_dir, f"{stem}_m{m}", curve)
        ratios[f"m{m}"] = {"sup_error": curve.sup_estimate, "marked_max": curve.marked_max,
                           "ratio": curve.marked_max / curve.sup_estimate}
    params = {"model": model, "alpha": alpha, "function": f.name, "n": n,
              "grid_points": args.grid_points, "window_pad": args.window_pad}
    return _finish(args, stem, params, outs, t0, condition_estimate=sol.cond,
                   residual_norm=sol.residual, errors=ratios)


def cmd_postprocess(args):
    t0 = time.perf_counter()
    f = get_function(args.function or "twingauss")
    n = _single(args.n, 90)
    m = args.m if args.m is not None else n + 1
    alpha = args.alpha if args.alpha is not None else 1.0
    run = run_postprocess(f, alpha, n, m, args.grid_points, args.window_pad)
    stem = f"postprocess_{f.name}_n{n}_m{m}"
    out = write_csv(Path(args.out_dir) / f"{stem}.csv", ["x", "err_u_n", "err_u_n1", "err_phi"],
                    zip(run.grid, run.err_u_n, run.err_u_n1, run.err_phi))
    rep = run.report
    summary = {
        "hull": rep.hull,
        "window": rep.window,
        "phi_inside": rep.inside,
        "phi_outside": rep.outside,
        "inputs_inside": run.inputs_inside,
        "inputs_outside": run.inputs_outside,
        "inside_improved": rep.inside <= min(run.inputs_inside),
        "outside_deteriorates": rep.outside > rep.inside and rep.outside > max(run.inputs_outside),
        "lstsq_residual": run.merged.residual,
        "rank": run.merged.rank,
    }
    summ = write_json(Path(args.out_dir) / f"{stem}_summary.json", summary)
    params = {"model": "model2", "alpha": alpha, "function": f.name, "n": n, "m": m,
              "grid_points": args.grid_points, "window_pad": args.window_pad}
    return _finish(args, stem, params, [out, summ], t0, **summary)


def cmd_verify(args):
    report = run_suite(args.suite, seed=args.seed)
    path = write_json(Path(args.out_dir) / f"verify_{args.suite}.json", report)
    for name, s in report["suites"].items():
        for c in s["checks"]:
            print(f"[{'PASS' if c['passed'] else 'FAIL'}] {name}: {c['name']} ({c['value']:.3g})")
    print(f"{'PASS' if report['passed'] else 'FAIL'} {args.suite} in {report['wall_time']:.1f} s")
    print(path)
    return EXIT_OK if report["passed"] else EXIT_VERIFY


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out-dir", default="out", help="directory for CSV/JSON outputs")
    common.add_argument("--grid-points", type=int, default=4000)
    common.add_argument("--window-pad", type=float, default=2.0,
                        help="plot window is [-sqrt(2n+3)-pad, sqrt(2n+3)+pad]")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--n", type=parse_range, default=None, help="degree or range a:b[:step]")
    common.add_argument("--m", type=int, default=None)
    common.add_argument("--alpha", type=parse_alpha, default=None, help="e.g. 0.5 or 1/2")
    common.add_argument("--model", choices=MODELS, default=None)
    common.add_argument("--function", choices=sorted(FUNCTIONS), default=None)

    p = argparse.ArgumentParser(prog="hermsc", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("psi-norms", parents=[common], help="sup norms of psi_n^(k)")
    s.add_argument("--k", default="0,1,2,3")
    s.set_defaults(func=cmd_psi_norms)

    s = sub.add_parser("supercon", parents=[common], help="interpolation error curves / ratios")
    s.add_argument("--ratios", action="store_true")
    s.set_defaults(func=cmd_supercon)

    s = sub.add_parser("collocate", parents=[common], help="collocation error curves")
    s.set_defaults(func=cmd_collocate)

    s = sub.add_parser("postprocess", parents=[common], help="least-squares merge of u_n, u_n+1")
    s.set_defaults(func=cmd_postprocess)

    s = sub.add_parser("verify", parents=[common], help="run invariant suites")
    s.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, CapabilityError) as exc:
        print(f"hermsc: error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except NumericalError as exc:
        print(f"hermsc: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except HermscError as exc:
        print(f"hermsc: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
