"""Render a sweep CSV as a metric-vs-t line chart, one curve per m.

Input is the sweep CSV written by the decoder package (header
`t,m,n,p,q,trials,exact_rate,as_good_rate,mean_ari,seed`). The chart is
a pure function of the file: curves are sorted by m ascending and the
plotted series are exactly the parsed values, so two runs over the same
CSV draw the same data whatever the backend does with pixels.

    python3 -m plots.render results/figure2.csv --metric as_good_rate \
        --out results/figure2.png --logx
"""

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

SWEEP_COLUMNS = ("t", "m", "n", "p", "q", "trials",
                 "exact_rate", "as_good_rate", "mean_ari", "seed")
METRICS = ("exact_rate", "as_good_rate", "mean_ari")


class SweepCsvError(ValueError):
    pass


@dataclass(frozen=True)
class ChartSpec:
    csv_path: Path
    metric: str
    out_path: Path
    logx: bool = False


def load_series(csv_path, metric):
    """Parse the CSV into {m: (t values, metric values)}, t ascending."""
    if metric not in METRICS:
        raise SweepCsvError(
            f"unknown metric {metric!r}; choose one of {', '.join(METRICS)}")
    with open(csv_path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SweepCsvError(f"{csv_path}: empty file, expected a sweep CSV")
        if metric not in header:
            raise SweepCsvError(f"{csv_path}: missing column '{metric}'")
        if tuple(header) != SWEEP_COLUMNS:
            raise SweepCsvError(
                f"{csv_path}: header {','.join(header)!r} is not the sweep "
                f"format {','.join(SWEEP_COLUMNS)!r}")
        rows = [dict(zip(header, row)) for row in reader]
    if not rows:
        raise SweepCsvError(f"{csv_path}: no data rows")
    series = {}
    for row in rows:
        series.setdefault(int(row["m"]), []).append(
            (int(row["t"]), float(row[metric])))
    return {m: tuple(zip(*sorted(points))) for m, points in series.items()}


def render(spec):
    """Draw the chart, write it to spec.out_path, return the Figure."""
    series = load_series(spec.csv_path, spec.metric)
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for m in sorted(series):
        ts, values = series[m]
        ax.plot(ts, values, marker="o", label=f"m={m}")
    if spec.logx:
        ax.set_xscale("log")
    ax.set_xlabel("t")
    ax.set_ylabel(spec.metric.replace("_", " "))
    ax.set_ylim(bottom=0)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(spec.out_path, dpi=150)
    return fig


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="plots.render", description="plot a sweep CSV metric against t")
    parser.add_argument("csv", type=Path)
    parser.add_argument("--metric", required=True, choices=METRICS)
    parser.add_argument("--out", type=Path, required=True)
    parser.add_argument("--logx", action="store_true")
    args = parser.parse_args(argv)
    try:
        fig = render(ChartSpec(args.csv, args.metric, args.out, args.logx))
    except SweepCsvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    plt.close(fig)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
