"""Command-line front end.

Subcommands: construct, encode, decode, simulate, complexity.  Frozen sets
travel as small text files (see code_model.save_frozen_set); frames travel as
one word per line, 0/1 strings for bits and whitespace-separated floats for
received LLRs (positive favors bit 0).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .channel import parse_channel
from .code_model import freeze_bec, freeze_montecarlo, freeze_rm, load_frozen_set, save_frozen_set
from .encoder import encode
from .list_decoder import list_decode
from .sim import complexity_probe, run_simulation, write_csv


def _parse_int_list(text):
    return [int(tok) for tok in text.split(",") if tok]


def _parse_range(text):
    """'6:10' -> [6..10]; '6,8,10' -> [6, 8, 10]; '7' -> [7]."""
    if ":" in text:
        lo, _, hi = text.partition(":")
        return list(range(int(lo), int(hi) + 1))
    return _parse_int_list(text)


def _cmd_construct(args):
    kind = args.construction
    if kind == "rm":
        if args.design_param is None:
            raise SystemExit("construct rm: --design-param gives the order r")
        spec = freeze_rm(int(args.design_param), args.m)
        if args.k is not None and args.k != spec.dimension:
            raise SystemExit(
                f"construct rm: order {int(args.design_param)} gives k={spec.dimension}, not {args.k}"
            )
    elif kind == "bec":
        if args.k is None or args.design_param is None:
            raise SystemExit("construct bec: needs --k and --design-param (erasure z)")
        spec = freeze_bec(args.m, args.k, float(args.design_param))
    else:
        if args.k is None or args.channel is None:
            raise SystemExit("construct mc: needs --k and --channel")
        rate = args.k / float(1 << args.m)
        ch, _ = parse_channel(args.channel, rate=rate)
        spec = freeze_montecarlo(args.m, args.k, ch, trials=args.trials, seed=args.seed)
    save_frozen_set(spec, args.out)
    print(f"wrote {args.out}: m={spec.m} k={spec.dimension} n={spec.n}")
    return 0


def _read_bit_lines(path, width, what):
    words = []
    with open(path, "r", encoding="ascii") as fh:
        for ln, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if len(line) != width or set(line) - {"0", "1"}:
                raise SystemExit(f"{path}:{ln}: expected {width} bits of 0/1 for {what}")
            words.append([int(c) for c in line])
    if not words:
        raise SystemExit(f"{path}: no {what} lines found")
    return np.array(words, dtype=np.uint8)


def _cmd_encode(args):
    spec = load_frozen_set(args.frozen_set)
    words = _read_bit_lines(args.infile, spec.dimension, "information bits")
    codewords = encode(spec, words)
    with open(args.out, "w", encoding="ascii", newline="\n") as fh:
        for row in codewords:
            fh.write("".join(str(b) for b in row) + "\n")
    print(f"encoded {len(words)} frame(s) -> {args.out}")
    return 0


def _cmd_decode(args):
    spec = load_frozen_set(args.frozen_set)
    frames = []
    with open(args.infile, "r", encoding="ascii") as fh:
        for ln, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            values = [float(tok) for tok in line.split()]
            if len(values) != spec.n:
                raise SystemExit(f"{args.infile}:{ln}: expected {spec.n} LLR values")
            frames.append(values)
    if not frames:
        raise SystemExit(f"{args.infile}: no LLR lines found")
    from .channel import SoftVector

    with open(args.out, "w", encoding="ascii", newline="\n") as fh:
        for values in frames:
            outcome = list_decode(
                spec, SoftVector(values), args.list_size, frozen_metric=args.frozen_metric
            )
            fh.write("".join(str(int(b)) for b in outcome.best.info_bits) + "\n")
    print(f"decoded {len(frames)} frame(s) -> {args.out}")
    return 0


def _cmd_simulate(args):
    spec = load_frozen_set(args.frozen_set)
    rate = spec.dimension / spec.n
    points = [parse_channel(tok, rate=rate) for tok in args.channel.split(",") if tok]
    results = run_simulation(
        spec,
        points,
        list_size=args.list_size,
        trials=args.trials,
        seed=args.seed,
        frozen_metric=args.frozen_metric,
    )
    if args.csv:
        write_csv(results, args.csv)
    print(f"spec m={spec.m} k={spec.dimension} L={args.list_size} trials={args.trials}")
    for res in results:
        print(
            f"  {res.channel}:{res.param}  fer={res.fer:.5g} (+-{res.fer_ci95:.2g})"
            f"  ber={res.ber:.5g}  kernel_ops={res.avg_kernel_ops:.1f}"
        )
    if args.csv:
        print(f"wrote {args.csv}")
    return 0


def _cmd_complexity(args):
    report = complexity_probe(
        _parse_range(args.m_range),
        _parse_int_list(args.l_range),
        trials=args.trials,
        seed=args.seed,
    )
    payload = report.to_dict()
    if args.report:
        with open(args.report, "w", encoding="ascii", newline="\n") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote {args.report}")
    dec = payload["decoder"]
    enc = payload["encoder"]
    print(f"decoder fit a={dec['fit_a']:.4f}, max |residual|={dec['max_abs_residual']:.3f}")
    print(f"encoder fit a={enc['fit_a']:.4f}, max |residual|={enc['max_abs_residual']:.3f}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rmpolar",
        description="Recursive codes: construction, encoding, decoding, simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a frozen-set file")
    p.add_argument("--m", type=int, required=True, help="recursion depth, n = 2**m")
    p.add_argument("--k", type=int, default=None, help="code dimension")
    p.add_argument("--construction", choices=("rm", "bec", "mc"), required=True)
    p.add_argument(
        "--design-param",
        default=None,
        help="rm: order r; bec: design erasure probability z; mc: unused",
    )
    p.add_argument("--channel", default=None, help="mc only: channel token, e.g. bsc:0.1")
    p.add_argument("--trials", type=int, default=10000, help="mc only: genie trials")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("encode", help="encode 0/1 information words from a file")
    p.add_argument("--frozen-set", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="decode received LLR frames from a file")
    p.add_argument("--frozen-set", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--list-size", type=int, default=1)
    p.add_argument("--frozen-metric", choices=("include", "ignore"), default="include")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("simulate", help="Monte-Carlo FER/BER sweep")
    p.add_argument("--frozen-set", required=True)
    p.add_argument(
        "--channel",
        required=True,
        help="comma-separated tokens: bsc:0.1, bec:0.3, awgn:2.0dB (Eb/N0)",
    )
    p.add_argument("--list-size", type=int, default=1)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--frozen-metric", choices=("include", "ignore"), default="include")
    p.add_argument("--csv", default=None, help="write per-point rows to this CSV file")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("complexity", help="kernel-count scaling probe")
    p.add_argument("--m-range", default="6:10", help="e.g. 6:10 or 6,8,10")
    p.add_argument("--l-range", default="1,2,4,8,16", help="comma-separated list sizes")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--report", default=None, help="write the JSON report here")
    p.set_defaults(func=_cmd_complexity)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")


if __name__ == "__main__":
    sys.exit(main())
