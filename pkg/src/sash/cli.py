"""Command line front end.

Subcommands: params (code and channel report), decode (cluster an edge
list), sweep (planted-partition accuracy sweep, CSV output), karate
(fixed benchmark on the karate club graph).

Exit codes: 0 success, 1 usage or validation errors, 2 I/O errors.
"""

import argparse
import sys
from pathlib import Path

from .channel import ChannelParams
from .codewords import GraphWord, decode_labeling
from .combinatorics import (SingleCodewordError, code_size,
                            min_discrepancy_closed_form, rate,
                            weight_distribution)
from .decoder import SashConfig, sash
from .evaluation import run_fixed_observation, run_sweep, run_trials
from . import karate


class EdgeListParseError(ValueError):
    """Malformed edge-list input; the message names the offending line."""


def parse_edge_text(text):
    """Parse an edge list: one 'i j' pair per line, 0-indexed.

    '#' starts a comment, blank lines are skipped, an optional header
    line 'n <int>' declares the vertex count (otherwise max index + 1),
    and duplicate edges collapse. Self-loops are rejected by line number.
    Returns (n, edges) with edges sorted and unique.
    """
    n_declared = None
    edges = set()
    max_vertex = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n_declared is not None:
                raise EdgeListParseError(f"line {lineno}: duplicate 'n' header")
            if len(tokens) != 2:
                raise EdgeListParseError(f"line {lineno}: header must be 'n <int>'")
            try:
                n_declared = int(tokens[1])
            except ValueError:
                raise EdgeListParseError(f"line {lineno}: header must be 'n <int>'") from None
            if n_declared < 2:
                raise EdgeListParseError(f"line {lineno}: need n >= 2, got {n_declared}")
            continue
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(
                f"line {lineno}: expected two vertex ids, got {line!r}") from None
        if i == j:
            raise EdgeListParseError(f"line {lineno}: self-loop at vertex {i}")
        if i < 0 or j < 0:
            raise EdgeListParseError(f"line {lineno}: negative vertex id")
        if i > j:
            i, j = j, i
        edges.add((i, j))
        max_vertex = max(max_vertex, j)
    if n_declared is None:
        if max_vertex < 1:
            raise EdgeListParseError(
                "cannot infer vertex count: no edges and no 'n <int>' header")
        n = max_vertex + 1
    else:
        if max_vertex >= n_declared:
            raise EdgeListParseError(
                f"vertex {max_vertex} out of range for declared n={n_declared}")
        n = n_declared
    return n, tuple(sorted(edges))


def format_edge_text(n, edges):
    """Inverse of parse_edge_text, normalised: header plus sorted edges."""
    lines = [f"n {n}"]
    lines.extend(f"{i} {j}" for i, j in sorted(set(edges)))
    return "\n".join(lines) + "\n"


def read_edge_file(path):
    return parse_edge_text(Path(path).read_text())


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise ValueError(f"need a positive integer, got {value}")
    return value


def _int_list(text):
    values = [int(part) for part in text.split(",") if part.strip()]
    if not values:
        raise ValueError("expected a comma-separated list of integers")
    return values


TRIALS_HEADER = "m,t,trial,exact,as_good,ari,delta_sent,delta_estimate"


def _trial_lines(m, t, outcomes):
    for trial, o in enumerate(outcomes):
        yield (f"{m},{t},{trial},{int(o.exact)},{int(o.as_good)},"
               f"{str(o.ari)},{str(o.delta_sent)},{str(o.delta_estimate)}")


def cmd_params(args):
    size = code_size(args.n, args.m)
    print(f"code C_{{{args.n},{args.m}}}: {size} codewords, "
          f"rate {str(rate(args.n, args.m))}")
    ch = ChannelParams(args.p, args.q)
    print(f"channel: p={str(args.p)}, q={str(args.q)}, gamma={str(ch.gamma)}")
    try:
        md = min_discrepancy_closed_form(args.n, args.m, ch.gamma)
        print(f"minimum discrepancy: {str(md.value)} [{md.regime}]")
    except SingleCodewordError:
        print("minimum discrepancy: undefined (single codeword)")
    support = [(w, c) for w, c in enumerate(weight_distribution(args.n, args.m)) if c]
    print("weight distribution: " + " ".join(f"{w}:{c}" for w, c in support))
    return 0


def cmd_decode(args):
    n, edges = read_edge_file(args.graph)
    observed = GraphWord.from_edges(n, edges)
    if not (1 <= args.m <= n):
        raise ValueError(f"need 1 <= m <= n, got m={args.m}, n={n}")
    ch = ChannelParams(args.p, args.q)
    cfg = SashConfig(n=n, m=args.m, channel=ch, t=args.t,
                     exhaustive=args.exhaustive, seed=args.seed)
    report = sash(observed, cfg)
    labels = decode_labeling(report.estimate)
    print("vertex,cluster")
    for v, c in enumerate(labels):
        print(f"{v},{c}")
    print(f"discrepancy: {str(report.discrepancy_to_observation)}", file=sys.stderr)
    print(f"candidates checked: {report.candidates_checked}", file=sys.stderr)
    print(f"radius at exit: {report.radius_at_exit}", file=sys.stderr)
    print(f"types visited: {report.types_visited}", file=sys.stderr)
    return 0


SWEEP_HEADER = "t,m,n,p,q,trials,exact_rate,as_good_rate,mean_ari,seed"


def cmd_sweep(args):
    if args.log_trials and args.out is None:
        raise _UsageError("--log-trials requires --out")
    ch = ChannelParams(args.p, args.q)
    lines = [SWEEP_HEADER]
    trial_lines = [TRIALS_HEADER]
    for m in args.m:
        if not (1 <= m <= args.n):
            raise ValueError(f"need 1 <= m <= n, got m={m}, n={args.n}")
        for t in args.t:
            outcomes = run_trials(args.n, m, ch, t, args.trials, args.seed,
                                  threads=args.threads, prior=args.prior)
            exact = sum(o.exact for o in outcomes) / args.trials
            good = sum(o.as_good for o in outcomes) / args.trials
            mean_ari = sum(o.ari for o in outcomes) / args.trials
            lines.append(f"{t},{m},{args.n},{str(args.p)},{str(args.q)},"
                         f"{args.trials},{str(exact)},{str(good)},"
                         f"{str(mean_ari)},{args.seed}")
            if args.log_trials:
                trial_lines.extend(_trial_lines(m, t, outcomes))
    body = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(body)
    else:
        Path(args.out).write_text(body)
        if args.log_trials:
            log_path = Path(args.out).with_suffix(".trials.csv")
            log_path.write_text("\n".join(trial_lines) + "\n")
    return 0


def cmd_karate(args):
    observed = karate.load_graph()
    p_hat, q_hat = karate.channel_estimate()
    ch = ChannelParams(p_hat, q_hat)
    print(f"karate club: n={karate.N_VERTICES}, {len(karate.EDGES)} edges")
    print(f"estimated channel: p={str(p_hat)}, q={str(q_hat)}, "
          f"gamma={str(ch.gamma)}")
    outcomes = run_fixed_observation(observed, karate.FACTIONS, args.m, ch,
                                     args.t, args.trials, args.seed,
                                     threads=args.threads)
    mean_ari = sum(o.ari for o in outcomes) / args.trials
    peak_ari = max(o.ari for o in outcomes)
    good = sum(o.as_good for o in outcomes) / args.trials
    print(f"m={args.m} t={args.t} trials={args.trials} seed={args.seed}")
    print(f"mean ARI: {str(mean_ari)}")
    print(f"peak ARI: {str(peak_ari)}")
    print(f"as-good rate: {str(good)}")
    if args.out is not None:
        lines = [TRIALS_HEADER]
        lines.extend(_trial_lines(args.m, args.t, outcomes))
        Path(args.out).write_text("\n".join(lines) + "\n")
    return 0


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser():
    parser = _Parser(prog="sash",
                     description="Community codes: count, decode, evaluate.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p_params = sub.add_parser("params", help="report code and channel parameters")
    p_params.add_argument("--n", type=_positive_int, required=True)
    p_params.add_argument("--m", type=_positive_int, required=True)
    p_params.add_argument("--p", type=float, required=True)
    p_params.add_argument("--q", type=float, required=True)
    p_params.set_defaults(func=cmd_params)

    p_decode = sub.add_parser("decode", help="decode an edge-list graph")
    p_decode.add_argument("graph", help="edge-list file")
    p_decode.add_argument("--m", type=_positive_int, required=True)
    p_decode.add_argument("--p", type=float, required=True)
    p_decode.add_argument("--q", type=float, required=True)
    p_decode.add_argument("--t", type=_positive_int, default=1)
    p_decode.add_argument("--seed", type=int, default=0)
    p_decode.add_argument("--exhaustive", action="store_true")
    p_decode.set_defaults(func=cmd_decode)

    p_sweep = sub.add_parser("sweep", help="planted-partition accuracy sweep")
    p_sweep.add_argument("--n", type=_positive_int, required=True)
    p_sweep.add_argument("--m", type=_int_list, required=True,
                         help="comma-separated minimum clique sizes")
    p_sweep.add_argument("--p", type=float, required=True)
    p_sweep.add_argument("--q", type=float, required=True)
    p_sweep.add_argument("--t", type=_int_list, default=[1],
                         help="comma-separated candidate counts")
    p_sweep.add_argument("--trials", type=_positive_int, default=100)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--threads", type=_positive_int, default=1)
    p_sweep.add_argument("--prior", choices=("types", "codewords"),
                         default="types")
    p_sweep.add_argument("--out", default=None, help="CSV path (default stdout)")
    p_sweep.add_argument("--log-trials", action="store_true",
                         help="also write per-trial rows next to --out")
    p_sweep.set_defaults(func=cmd_sweep)

    p_karate = sub.add_parser("karate", help="benchmark on the karate club")
    p_karate.add_argument("--m", type=_positive_int, default=10)
    p_karate.add_argument("--t", type=_positive_int, default=100)
    p_karate.add_argument("--trials", type=_positive_int, default=100)
    p_karate.add_argument("--seed", type=int, default=0)
    p_karate.add_argument("--threads", type=_positive_int, default=1)
    p_karate.add_argument("--out", default=None, help="per-trial CSV path")
    p_karate.set_defaults(func=cmd_karate)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"sash: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except OSError as exc:
        print(f"sash: {exc}", file=sys.stderr)
        return 2
    except (ValueError, _UsageError) as exc:
        print(f"sash: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
