"""Command-line front end: ``dscode <subcommand> ...``.

Exit status 0 on success, 1 on a domain error, 2 on a usage error.  Every
file written with --out gets a JSON manifest next to it (``<out>.manifest.json``).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import yaml

from . import __version__
from . import bounds_asymptotic as ba
from . import bounds_finite as bf
from .codefile import (CodeSpec, SpecError, dump_code_spec, enumerator_to_csv, load_code_spec, resolve_spec_path,
                       rows_to_csv)
from .construction import ConstructionError, dual_generator_matrix, symplectic_complete
from .enumerators import SizeLimitError, css_distance_scan, enumerate_code, enumerate_dual, min_distance
from .ensemble import EnsembleParams, avg_enumerators, sample_ensemble
from .lp import build_lp, solve_feasibility, verdict_to_distance_bound
from .syndrome_sim import MeasurementModel, exact_Pse, mc_Pse, syndrome_code
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


# -- output helpers ------------------------------------------------------------


def _digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _emit(args, text: str, inputs=(), seed=None) -> None:
    """Print ``text`` or write it to --out together with a manifest."""
    out = getattr(args, "out", None)
    if not out:
        sys.stdout.write(text)
        return
    Path(out).write_text(text)
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out")}
    manifest = {
        "subcommand": args.command,
        "parameters": params,
        "seed": seed,
        "tool_version": __version__,
        "inputs": {str(p): _digest(p) for p in inputs},
        "outputs": [str(out)],
    }
    Path(str(out) + ".manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True, default=str) + "\n")


def _spec(args) -> tuple[CodeSpec, Path]:
    path = resolve_spec_path(args.spec)
    return load_code_spec(path), path


# -- subcommands ---------------------------------------------------------------


def cmd_construct(args) -> int:
    spec, path = _spec(args)
    code = spec.code
    basis = symplectic_complete(code.H)
    doc = yaml.safe_load(dump_code_spec(spec))
    doc["m"] = code.m
    doc["hds"] = [str(v) for v in code.rows]
    doc["f"] = [f.to_string() for f in code.f_vectors]
    doc["dual_generators"] = [str(v) for v in dual_generator_matrix(code, basis)]
    _emit(args, yaml.safe_dump(doc, sort_keys=False), inputs=[path])
    return 0


def cmd_enumerate(args) -> int:
    spec, path = _spec(args)
    B = enumerate_dual(spec.code) if args.dual else enumerate_code(spec.code)
    _emit(args, enumerator_to_csv(B), inputs=[path])
    return 0


def cmd_distance(args) -> int:
    spec, path = _spec(args)
    if spec.css is not None:
        d = css_distance_scan(spec.css.hprime, spec.n, spec.css.stabilizer_rows)
        print(f"d={d}")
    else:
        res = min_distance(spec.code)
        print(f"d={res.d}")
        print(f"degenerate={'yes' if res.degenerate else 'no'}")
    return 0


def cmd_bound(args) -> int:
    kind, n, d = args.kind, args.n, args.d
    if kind == "hybrid":
        if args.tD is None or args.tS is None:
            raise UsageError("hybrid needs --tD and --tS")
        k = bf.hybrid_hamming_max_k(n, args.tD, args.tS)
        if d is None:
            d = 2 * args.tD + 1
        term = "V_D V_S <= 2^m"
    else:
        if d is None:
            raise UsageError(f"{kind} needs --d")
        if kind == "singleton":
            k, term = bf.singleton_max_k(n, d), "n - 2(d - 1)"
        elif kind == "hamming-nondeg":
            k, term = bf.hamming_nondeg_max_k(n, d), "f(0,0)/f_00"
        else:
            k, best = bf.hamming_unrestricted_max_k(n, d, with_details=True)
            term = f"lambda={best[2]} {best[1]}" if best else ""
    _emit(args, rows_to_csv(["n", "d", "k_max", "dominating_term"], [[n, d, k, term]]))
    return 0


def cmd_lp(args) -> int:
    if args.scan_d:
        d = verdict_to_distance_bound(args.n, args.k, args.r)
        print(f"d_max={d}")
        return 0
    if args.d is None:
        raise UsageError("lp needs --d unless --scan-d is given")
    t = build_lp(args.n, args.k, args.d, args.r)
    v = solve_feasibility(t)
    print(v.status)
    if args.out:
        if v.feasible:
            rows = [[side, i, j, val] for (side, i, j), val in v.witness.items()]
            text = rows_to_csv(["variable", "i", "j", "value"], rows)
        else:
            text = rows_to_csv(["constraint", "multiplier"], [[lab, y] for lab, y in v.certificate if y])
        _emit(args, text)
    return 0


def cmd_ensemble(args) -> int:
    p = EnsembleParams(args.n, args.k, args.r)
    avg = avg_enumerators(p)
    emp = sample_ensemble(p, args.samples, args.seed) if args.samples else None
    header = ["side", "i", "j", "closed_form"] + (["empirical"] if emp else [])
    rows = []
    for side, table, etable in (("code", avg.code, emp.code if emp else None),
                                ("dual", avg.dual, emp.dual if emp else None)):
        for i in range(p.n + 1):
            for j in range(p.slen + 1):
                row = [side, i, j, table[i, j]]
                if emp:
                    row.append(etable[i][j])
                rows.append(row)
    _emit(args, rows_to_csv(header, rows), seed=args.seed if emp else None)
    return 0


def _grid(text: str) -> list[Fraction]:
    try:
        a, b, step = (Fraction(v) for v in text.split(":"))
    except ValueError:
        raise UsageError("--pm-grid must look like a:b:step") from None
    if step <= 0 or b < a:
        raise UsageError("--pm-grid needs a <= b and step > 0")
    out, v = [], a
    while v <= b:
        out.append(v)
        v += step
    return out


def _scheme(name: str):
    """(label, SM code, default weights) for an --sm argument."""
    if name in ("rep5", "builtin-15-3"):
        return name, syndrome_code(name), None
    spec = load_code_spec(name)
    code = spec.code
    weights = [g.weight for g in code.H.rows] + [f.weight for f in code.f_vectors]
    return Path(name).stem, code.sm, weights


def cmd_simulate(args) -> int:
    grid = _grid(args.pm_grid)
    given = [int(w) for w in args.weights.split(",")] if args.weights else None
    schemes = [_scheme(s) for s in args.sm]
    header = ["p_m"]
    for label, _, _ in schemes:
        header += [f"P_se[{label}]", f"P_SBER[{label}]", f"mode[{label}]"]
        if args.mc:
            header += [f"P_se_mc[{label}]", f"radius_mc[{label}]"]
    rows = []
    for pm in grid:
        row = [float(pm)]
        for label, sm, default in schemes:
            weights = given or default
            if weights is None:
                raise UsageError(f"--weights is required for {label}")
            model = MeasurementModel(pm, tuple(weights))
            res = exact_Pse(sm, model, exact=not args.float)
            row += [float(res.P_se), float(res.P_SBER), res.mode]
            if args.mc:
                est = mc_Pse(sm, MeasurementModel(float(pm), tuple(weights)), args.mc, args.seed)
                row += [est.P_se, est.radius_se]
        rows.append(row)
    _emit(args, rows_to_csv(header, rows), seed=args.seed if args.mc else None)
    return 0


def cmd_asymptotic(args) -> int:
    pts = ba.curve(args.curve, args.grid, args.rho)
    x = "R" if args.curve in ("gv", "gv-ds", "rho-star") else "delta"
    _emit(args, rows_to_csv([x, args.curve], pts))
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dscode", description="Quantum data-syndrome code workbench.")
    p.add_argument("--version", action="version", version=f"dscode {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("construct", cmd_construct, "build H_DS and the dual generator matrix from a code file")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--out")

    sp = add("enumerate", cmd_enumerate, "split weight enumerator as CSV")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--dual", action="store_true", help="enumerate C_DS^perp instead of C_DS")
    sp.add_argument("--out")

    sp = add("distance", cmd_distance, "minimum distance of a code file")
    sp.add_argument("--spec", required=True)

    sp = add("bound", cmd_bound, "largest k allowed by a finite-length bound")
    sp.add_argument("--kind", required=True, choices=["singleton", "hamming-nondeg", "hamming-unrestricted", "hybrid"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int)
    sp.add_argument("--tD", type=int)
    sp.add_argument("--tS", type=int)
    sp.add_argument("--out")

    sp = add("lp", cmd_lp, "exact LP feasibility test for [[n,k,d:r]]")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--scan-d", action="store_true", help="report the largest feasible d")
    sp.add_argument("--out", help="write the witness or certificate as CSV")

    sp = add("ensemble", cmd_ensemble, "average enumerators of the random ensemble")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--samples", type=int, default=0)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--out")

    sp = add("simulate", cmd_simulate, "syndrome decoding error rates")
    sp.add_argument("--sm", action="append", required=True, help="rep5, builtin-15-3 or a code file (repeatable)")
    sp.add_argument("--weights", help="comma-separated stabilizer weights, one value or one per syndrome bit")
    sp.add_argument("--pm-grid", required=True, help="a:b:step")
    sp.add_argument("--mc", type=int, default=0, help="also run this many Monte Carlo trials")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--float", action="store_true", help="binary64 instead of exact rationals")
    sp.add_argument("--out")

    sp = add("asymptotic", cmd_asymptotic, "sample an asymptotic curve")
    sp.add_argument("--curve", required=True, choices=list(ba.CURVES))
    sp.add_argument("--grid", type=int, required=True)
    sp.add_argument("--rho", type=float, default=0.0)
    sp.add_argument("--out")

    sp = add("verify", cmd_verify, "run a self-check suite")
    sp.add_argument("suite", choices=list(SUITES))
    return p


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        parser.print_help(sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    if getattr(args, "mc", 0) and args.seed is None:
        args.seed = int(np.random.SeedSequence().entropy % 2 ** 32)
    if getattr(args, "samples", 0) and args.seed is None:
        args.seed = int(np.random.SeedSequence().entropy % 2 ** 32)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dscode {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (SpecError, ConstructionError, SizeLimitError, ba.DomainError, ValueError, ArithmeticError,
            FileNotFoundError) as exc:
        print(f"dscode {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
