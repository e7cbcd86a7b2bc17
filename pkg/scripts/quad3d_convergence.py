"""Monte Carlo convergence of SIR and SAVE eigenpairs on the quad3d ridge function."""
import argparse
from pathlib import Path

import numpy as np

from ridge_recovery import diagnostics as dg
from ridge_recovery import inverse_regression as ir
from ridge_recovery import io
from ridge_recovery import testbed as tb
from ridge_recovery.cli import convergence_document


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=float, nargs=2, default=(3, 5), help="log10 of the smallest and largest N")
    parser.add_argument("--sizes", type=int, default=5)
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--reference-n", type=int, default=10**6)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=4)
    parser.add_argument("--out", default="results/quad3d")
    args = parser.parse_args()

    grid = np.round(np.logspace(*args.grid, args.sizes)).astype(int)
    fn = tb.make_function("quad3d")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for method in ir.METHODS:
        rep = dg.convergence_study(
            fn, grid, args.trials, 3, method, reference_N=args.reference_n, seed=args.seed, workers=args.workers
        )
        io.write_json(out / f"convergence_{method}.json", convergence_document(rep))
        print(f"{method}: eigenvalue slope {rep.eig_slope:.3f}, subspace slope {rep.sub_slope:.3f}")
        for N, e, s in zip(grid, rep.eig_err.mean(axis=1), rep.sub_err.mean(axis=1)):
            print(f"  N={N:>7d}  eig err {e:.3e}  subspace err {s:.3e}")


if __name__ == "__main__":
    main()
