"""Run the full method x sigma comparison grid on the 512x512 synthetic image.

Produces the per-trial CSV plus the aggregate summary table (one row per
sigma, one mean-PSNR column per method), the same layout the benchmark CLI
emits.  Usage:

    python3 scripts/run_full_grid.py [--out-dir results] [--trials 5]
"""

import argparse
from pathlib import Path

from denoisebench.bench import (
    BenchConfig,
    DEFAULT_SIGMAS,
    run_benchmark,
    summarize,
    write_csv,
    write_summary,
)
from denoisebench.imagecore import save_pgm
from denoisebench.pipelines import METHODS, MethodConfig
from denoisebench.synth import texture_image


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--trials", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=4)
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    image_path = out_dir / "texture512.pgm"
    save_pgm(texture_image(512), image_path)

    config = BenchConfig(
        image_paths=(str(image_path),),
        sigmas=DEFAULT_SIGMAS,
        methods=tuple(MethodConfig(method=m) for m in METHODS),
        trials=args.trials,
        master_seed=args.seed,
        workers=args.workers,
        record_runtime=True,
    )
    rows = run_benchmark(config)
    write_csv(rows, out_dir / "grid.csv")
    write_summary(rows, out_dir / "grid_summary.csv", out_dir / "grid_plot.dat")

    summary = summarize(rows)
    methods = summary["methods"]
    print("mean PSNR (dB), texture512, %d trials" % args.trials)
    print("sigma  " + "  ".join(f"{m:>13}" for m in methods))
    for sigma in summary["sigmas"]:
        cells = "  ".join(f"{summary['psnr'][m, sigma]:13.2f}" for m in methods)
        print(f"{sigma:5g}  {cells}")
    print(f"\nwrote {out_dir}/grid.csv, grid_summary.csv, grid_plot.dat")


if __name__ == "__main__":
    main()
