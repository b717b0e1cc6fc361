"""Planted-partition accuracy grid for the n=16 working example.

Runs the decoder over m in {4,6,8} and t in {1,10,100} at p=0.1, q=0.3
with 100 trials per cell and writes one CSV row per (m,t). This is the
grid behind the accuracy-vs-t and ARI-vs-t figures; plot it with the
plots package:

    python3 scripts/accuracy_sweep.py --out results/figure2.csv
    python3 -m plots.render results/figure2.csv --metric as_good_rate \
        --out results/figure2.png --logx
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sash import ChannelParams, run_sweep
from sash.cli import SWEEP_HEADER


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--m", type=int, nargs="+", default=[4, 6, 8])
    ap.add_argument("--t", type=int, nargs="+", default=[1, 10, 100])
    ap.add_argument("--p", type=float, default=0.1)
    ap.add_argument("--q", type=float, default=0.3)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=8)
    ap.add_argument("--out", type=Path, default=Path("results/figure2.csv"))
    args = ap.parse_args()

    ch = ChannelParams(args.p, args.q)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    lines = [SWEEP_HEADER]
    for m in args.m:
        start = time.time()
        rows = run_sweep(args.n, m, ch, tuple(args.t), args.trials,
                         args.seed, threads=args.threads)
        for r in rows:
            lines.append(",".join(map(str, (
                r.t, m, args.n, args.p, args.q, args.trials,
                r.exact_rate, r.as_good_rate, r.mean_ari, args.seed))))
        print(f"m={m} done in {time.time() - start:.1f}s", file=sys.stderr)
    args.out.write_text("\n".join(lines) + "\n")
    print(f"wrote {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
