"""Run the full certificate pipeline on every even s <= n <= MAX_N and write reports.

    python3 scripts/run_sweep.py --max-n 12 --jobs 4 --out results/
"""

import argparse
import os
import time
from pathlib import Path

from typeb_contraction.cli import VerifyOptions, sweep, to_json, to_markdown


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results")
    args = ap.parse_args()

    start = time.perf_counter()
    reports = sweep(args.max_n, VerifyOptions(seed=args.seed, timing=False), jobs=args.jobs)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "sweep.json").write_text(to_json(reports), encoding="utf-8")
    (out / "sweep.md").write_text(to_markdown(reports), encoding="utf-8")
    print(to_markdown(reports))
    print(f"{len(reports)} cases in {time.perf_counter() - start:.1f} s, reports in {out}/")


if __name__ == "__main__":
    main()
