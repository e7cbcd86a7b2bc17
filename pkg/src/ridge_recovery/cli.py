"""Command-line interface: ``analyze``, ``bootstrap``, ``sample`` and ``converge``."""
from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import diagnostics as dg
from . import inverse_regression as ir
from . import io, testbed
from .errors import InvalidInputError, RidgeRecoveryError
from .slicing import EQUAL_COUNT, KINDS, SlicingStrategy, default_slice_count
from .standardize import Dataset, pullback

RESULT_SCHEMA_ID = "ridge-recovery/result/v1"
CONVERGENCE_SCHEMA_ID = "ridge-recovery/convergence/v1"


@dataclass(frozen=True)
class AnalysisConfig:
    method: str = "both"
    slicing: str = EQUAL_COUNT
    slices: int | None = None  # None: default slice-count formula
    dim: int | None = None  # None: suggested dimension
    bootstrap_B: int | None = None
    seed: int | None = None
    percentiles: tuple = dg.DEFAULT_PERCENTILES

    def __post_init__(self):
        if self.method not in ir.METHODS + ("both",):
            raise InvalidInputError(f"unknown method {self.method!r}")
        if self.bootstrap_B is not None and self.seed is None:
            raise InvalidInputError("--seed is required when bootstrapping")

    @property
    def methods(self) -> tuple:
        return ir.METHODS if self.method == "both" else (self.method,)

    def strategy(self, data: Dataset) -> SlicingStrategy:
        R = self.slices if self.slices is not None else default_slice_count(data.N, data.m)
        return SlicingStrategy(self.slicing, R)


def _columns(M) -> list:
    """Column-major nesting: one inner list per column."""
    return np.asarray(M, dtype=float).T.tolist()


def analyze_one(config: AnalysisConfig, data: Dataset, method: str) -> tuple[dict, np.ndarray]:
    """One result document plus the summary-plot table for ``method``."""
    if config.dim is not None and not 1 <= config.dim <= data.m:
        raise InvalidInputError(f"--dim must be in 1..{data.m}")
    strategy = config.strategy(data)
    fit = ir.fit(data, method, strategy)
    est = fit.estimate
    warn = list(fit.partition.warnings)
    if est.R < strategy.requested_R and not fit.partition.degenerate:
        warn.append(f"requested {strategy.requested_R} slices, achieved {est.R} after merging")
    suggested = dg.suggest_dimension(est.eig) if data.m >= 2 else 1
    n = config.dim if config.dim is not None else suggested
    sub = ir.estimate_subspace(est, n)
    doc = {
        "schema": RESULT_SCHEMA_ID,
        "method": method,
        "m": data.m,
        "N": data.N,
        "R": est.R,
        "counts": est.counts.tolist(),
        "slicing": {"kind": strategy.kind, "requested_R": strategy.requested_R},
        "eigenvalues": est.eig.values.tolist(),
        "eigenvectors_standardized": _columns(est.eig.vectors),
        "directions_original": _columns(pullback(fit.standardizer, est.eig.vectors)),
        "suggested_n": suggested,
        "subspace": {"n": n, "basis": _columns(sub.basis)},
        "bootstrap": None,
        "warnings": warn,
    }
    if config.bootstrap_B is not None:
        br = dg.bootstrap_eigs(data, method, strategy, config.bootstrap_B, config.percentiles, config.seed)
        doc["bootstrap"] = {
            "B": br.B,
            "seed": config.seed,
            "percentiles": list(br.percentiles),
            "lo": br.lo.tolist(),
            "hi": br.hi.tolist(),
            "point": br.point.tolist(),
        }
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        summary = dg.summary_coordinates(data, fit.standardizer, sub)
    return doc, summary


def run_analyze(config: AnalysisConfig, data: Dataset) -> list[dict]:
    return [analyze_one(config, data, method)[0] for method in config.methods]


def convergence_document(report: dg.ConvergenceReport) -> dict:
    return {
        "schema": CONVERGENCE_SCHEMA_ID,
        "function": report.function,
        "method": report.method,
        "n": report.n,
        "grid": report.grid.tolist(),
        "trials": report.trials,
        "reference_N": report.reference_N,
        "seed": report.seed,
        "reference_eigenvalues": report.reference_eigenvalues.tolist(),
        "eig_err": report.eig_err.tolist(),
        "sub_err": report.sub_err.tolist(),
        "mean_eig_err": report.eig_err.mean(axis=1).tolist(),
        "mean_sub_err": report.sub_err.mean(axis=1).tolist(),
        "slopes": {"eig": report.eig_slope, "subspace": report.sub_slope},
        "slopes_defined": report.slopes_defined,
        "warnings": [] if report.slopes_defined else ["slopes undefined: grid has a single sample size"],
    }


def parse_params(items) -> dict:
    """``name=v`` or ``name=v1,v2,...`` pairs into floats / float arrays."""
    params = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise InvalidInputError(f"--param expects name=value, got {item!r}")
        try:
            nums = [float(v) for v in value.split(",")]
        except ValueError:
            raise InvalidInputError(f"--param {name}: values must be numeric") from None
        params[name.strip()] = nums[0] if len(nums) == 1 else np.array(nums)
    return params


def _int_list(text: str) -> list[int]:
    try:
        return [int(float(v)) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _percentiles(text: str) -> tuple:
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected two comma-separated numbers, e.g. 2.5,97.5") from None
    return lo, hi


def _summary_path(base: str, method: str, both: bool) -> Path:
    p = Path(base)
    return p.with_name(f"{p.stem}_{method}{p.suffix}") if both else p


def cmd_analyze(args, bootstrap_default=None) -> int:
    B = args.bootstrap if args.bootstrap is not None else bootstrap_default
    config = AnalysisConfig(
        method=args.method,
        slicing=args.slicing,
        slices=args.slices,
        dim=args.dim,
        bootstrap_B=B,
        seed=args.seed,
        percentiles=args.percentiles,
    )
    data = io.read_dataset(args.input)
    docs = []
    for method in config.methods:
        doc, summary = analyze_one(config, data, method)
        docs.append(doc)
        if args.summary_csv:
            n = doc["subspace"]["n"]
            header = [f"w{k + 1}" for k in range(n)] + ["y"]
            io.write_table(_summary_path(args.summary_csv, method, len(config.methods) > 1), header, summary)
    for doc in docs:
        for w in doc["warnings"]:
            print(f"warning: [{doc['method']}] {w}", file=sys.stderr)
    io.write_json(args.output, docs[0] if len(docs) == 1 else docs)
    return 0


def cmd_sample(args) -> int:
    _require_seed(args)
    fn = testbed.make_function(args.function, **parse_params(args.param))
    data = testbed.sample_inputs(fn, args.n, args.seed)
    if args.output is None:
        raise InvalidInputError("sample needs --output")
    io.write_dataset(args.output, data)
    return 0


def cmd_converge(args) -> int:
    _require_seed(args)
    fn = testbed.make_function(args.function, **parse_params(args.param))
    strategy = SlicingStrategy(args.slicing, args.slices) if args.slices is not None else None
    report = dg.convergence_study(
        fn,
        args.grid,
        args.trials,
        args.dim,
        args.method,
        strategy=strategy,
        reference_N=args.reference_n,
        seed=args.seed,
        workers=args.workers,
    )
    doc = convergence_document(report)
    for w in doc["warnings"]:
        print(f"warning: {w}", file=sys.stderr)
    io.write_json(args.output, doc)
    return 0


def _require_seed(args):
    if args.seed is None:
        raise InvalidInputError(f"{args.command} needs --seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ridge-recovery",
        description="Recover ridge subspaces from point samples with SIR and SAVE.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def slicing_flags(p):
        p.add_argument("--slices", type=int, default=None, help="number of slices (default: size-based formula)")
        p.add_argument("--slicing", choices=KINDS, default=EQUAL_COUNT)

    for name in ("analyze", "bootstrap"):
        p = sub.add_parser(name, help="estimate eigenpairs and subspaces from a CSV dataset")
        p.add_argument("--input", required=True, help="CSV with header x1,...,xm,y")
        p.add_argument("--output", default=None, help="result JSON (default: stdout)")
        p.add_argument("--method", choices=ir.METHODS + ("both",), default="both")
        slicing_flags(p)
        p.add_argument("--dim", type=int, default=None, help="subspace dimension (default: suggested)")
        p.add_argument("--bootstrap", type=int, default=None, metavar="B", help="bootstrap resamples")
        p.add_argument("--percentiles", type=_percentiles, default=dg.DEFAULT_PERCENTILES)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--summary-csv", default=None, help="write summary-plot coordinates w1..wn,y")

    p = sub.add_parser("sample", help="sample a built-in test function to CSV")
    p.add_argument("--function", choices=testbed.NAMES, required=True)
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    p.add_argument("--n", type=int, required=True, help="number of samples")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--output", default=None)

    p = sub.add_parser("converge", help="Monte Carlo convergence study on a test function")
    p.add_argument("--function", choices=testbed.NAMES, required=True)
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    p.add_argument("--method", choices=ir.METHODS, default=ir.SIR)
    slicing_flags(p)
    p.add_argument("--grid", type=_int_list, required=True, help="sample sizes, e.g. 1000,3000,10000")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--dim", type=int, required=True, help="subspace dimension n for the subspace error")
    p.add_argument("--reference-n", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", default=None, help="report JSON (default: stdout)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "bootstrap":
            return cmd_analyze(args, bootstrap_default=dg.DEFAULT_B)
        if args.command == "sample":
            return cmd_sample(args)
        return cmd_converge(args)
    except RidgeRecoveryError as exc:
        print(io.dumps({"error": {"code": exc.code, "message": str(exc)}}), file=sys.stderr, end="")
        return 1
    except OSError as exc:
        print(io.dumps({"error": {"code": "io_error", "message": str(exc)}}), file=sys.stderr, end="")
        return 1


if __name__ == "__main__":
    sys.exit(main())
