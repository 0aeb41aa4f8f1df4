"""Monte-Carlo frame-error simulation and complexity probes.

Each trial draws a fresh generator seeded with base_seed + trial_index, so a
run is reproducible bit for bit and trials could be farmed out independently
without changing the aggregate.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .channel import Channel, modulate, posteriors, transmit
from .code_model import CodeSpec, Path
from .encoder import encode, random_info_bits
from .list_decoder import list_decode
from .sc_decoder import OpCounter

__all__ = [
    "CSV_HEADER",
    "TrialResult",
    "run_simulation",
    "write_csv",
    "ComplexityReport",
    "complexity_probe",
]

CSV_HEADER = (
    "channel,param,trials,frame_errors,bit_errors,fer,ber,fer_ci95,"
    "avg_kernel_ops,avg_select_ops,seed"
)


@dataclass
class TrialResult:
    """Aggregate of one channel point."""

    channel: str
    param: float
    trials: int
    frame_errors: int
    bit_errors: int
    fer: float
    ber: float
    fer_ci95: float
    avg_kernel_ops: float
    avg_select_ops: float
    seed: int

    def row(self):
        return [
            self.channel,
            str(self.param),
            str(self.trials),
            str(self.frame_errors),
            str(self.bit_errors),
            str(self.fer),
            str(self.ber),
            str(self.fer_ci95),
            str(self.avg_kernel_ops),
            str(self.avg_select_ops),
            str(self.seed),
        ]


def run_simulation(spec, channel_points, list_size, trials, seed, frozen_metric="include"):
    """Estimate FER/BER for `spec` at each channel point.

    Parameters
    ----------
    spec : CodeSpec with dimension >= 1.
    channel_points : iterable of (Channel, display_param) pairs, e.g. from
        :func:`rmpolar.channel.parse_channel`.
    list_size : decoder list size L.
    trials : frames per channel point, >= 1.
    seed : base seed; trial t uses default_rng(seed + t).
    frozen_metric : forwarded to the list decoder.

    Returns
    -------
    list of TrialResult sorted by (channel kind, parameter).
    """
    points = list(channel_points)
    if not points:
        raise ValueError("need at least one channel point")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if spec.dimension < 1:
        raise ValueError("cannot simulate a spec with no information paths")

    results = []
    nbits = spec.dimension
    for ch, display in points:
        frame_errors = 0
        bit_errors = 0
        kernel_total = 0
        select_total = 0
        for t in range(trials):
            rng = np.random.default_rng(seed + t)
            sent = random_info_bits(spec, rng)
            observed = transmit(ch, modulate(encode(spec, sent)), rng)
            beliefs = posteriors(ch, observed)
            outcome = list_decode(spec, beliefs, list_size, frozen_metric=frozen_metric)
            wrong = int(np.sum(outcome.best.info_bits != sent))
            bit_errors += wrong
            frame_errors += wrong > 0
            kernel_total += outcome.kernel_ops
            select_total += outcome.select_ops
        fer = frame_errors / trials
        results.append(
            TrialResult(
                channel=ch.kind,
                param=display,
                trials=trials,
                frame_errors=frame_errors,
                bit_errors=bit_errors,
                fer=fer,
                ber=bit_errors / (trials * nbits),
                fer_ci95=1.96 * math.sqrt(fer * (1.0 - fer) / trials),
                avg_kernel_ops=kernel_total / trials,
                avg_select_ops=select_total / trials,
                seed=seed,
            )
        )
    results.sort(key=lambda r: (r.channel, r.param))
    return results


def write_csv(results, path):
    """Write TrialResults to `path` under the fixed schema, rows pre-sorted."""
    with open(path, "w", encoding="ascii", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for res in results:
            writer.writerow(res.row())


def _fit_through_origin(xs, ys):
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    a = float((xs * ys).sum() / (xs * xs).sum())
    residuals = (ys - a * xs) / (a * xs)
    return a, residuals


@dataclass
class ComplexityReport:
    """Kernel-count scaling measurements and their fits.

    decoder_points : list of (m, n, L, mean_kernel_ops, mean_select_ops).
    decoder_fit / decoder_residuals : least-squares constant a for the model
        a * L * n * log2(n) and the per-point relative residuals.
    encoder_points : list of (m, n, mean_kernel_ops).
    encoder_fit / encoder_residuals : same for the model a * n * log2(n).
    """

    decoder_points: list
    decoder_fit: float
    decoder_residuals: list
    encoder_points: list
    encoder_fit: float
    encoder_residuals: list

    def to_dict(self):
        return {
            "decoder": {
                "model": "a * L * n * log2(n) kernel ops",
                "fit_a": self.decoder_fit,
                "points": [
                    {
                        "m": m,
                        "n": n,
                        "L": L,
                        "kernel_ops": k,
                        "select_ops": s,
                        "residual": r,
                    }
                    for (m, n, L, k, s), r in zip(self.decoder_points, self.decoder_residuals)
                ],
                "max_abs_residual": max(abs(r) for r in self.decoder_residuals),
            },
            "encoder": {
                "model": "a * n * log2(n) kernel ops",
                "fit_a": self.encoder_fit,
                "points": [
                    {"m": m, "n": n, "kernel_ops": k}
                    for (m, n, k) in self.encoder_points
                ],
                "max_abs_residual": max(abs(r) for r in self.encoder_residuals),
            },
        }


def complexity_probe(m_values, list_sizes, trials=1, seed=7):
    """Measure encoder/decoder kernel counts over a grid of (m, L).

    Uses full-rate specs (every path informational) so the list reaches its
    full width immediately; kernel counts per hypothesis do not depend on the
    frozen set.  Counts are noise-independent, so small `trials` suffice.
    """
    m_values = list(m_values)
    list_sizes = list(list_sizes)
    if not m_values or not list_sizes:
        raise ValueError("need at least one m and one list size")

    decoder_points = []
    encoder_points = []
    for m in m_values:
        n = 1 << m
        spec = CodeSpec(m=m, info_set=tuple(Path.from_index(i, m) for i in range(n)))
        ch = Channel.awgn(1.0)
        enc_counter = OpCounter()
        rng = np.random.default_rng(seed + m)
        frames = []
        for _ in range(trials):
            bits = random_info_bits(spec, rng)
            cw = encode(spec, bits, counter=enc_counter)
            frames.append(posteriors(ch, transmit(ch, modulate(cw), rng)))
        encoder_points.append((m, n, enc_counter.kernel / trials))
        for L in list_sizes:
            kernel = 0
            select = 0
            for beliefs in frames:
                outcome = list_decode(spec, beliefs, L)
                kernel += outcome.kernel_ops
                select += outcome.select_ops
            decoder_points.append((m, n, L, kernel / trials, select / trials))

    dec_fit, dec_res = _fit_through_origin(
        [L * n * math.log2(n) for (_, n, L, _, _) in decoder_points],
        [k for (_, _, _, k, _) in decoder_points],
    )
    enc_fit, enc_res = _fit_through_origin(
        [n * math.log2(n) for (_, n, _) in encoder_points],
        [k for (_, _, k) in encoder_points],
    )
    return ComplexityReport(
        decoder_points=decoder_points,
        decoder_fit=dec_fit,
        decoder_residuals=[float(r) for r in dec_res],
        encoder_points=encoder_points,
        encoder_fit=enc_fit,
        encoder_residuals=[float(r) for r in enc_res],
    )
