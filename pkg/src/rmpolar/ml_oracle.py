"""Brute-force maximum-likelihood decoding for small codes.

Enumerates all 2**N codewords and scores each against the received beliefs.
Intended as a test oracle; the enumeration is refused above N = 20.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import log_expit

from .channel import SoftVector
from .encoder import encode
from .list_decoder import METRIC_TIE_EPS

__all__ = ["MAX_ENUM_BITS", "MLResult", "codeword_loglik", "likelihood_table", "ml_decode"]

MAX_ENUM_BITS = 20


@dataclass
class MLResult:
    """Maximum-likelihood decision with its log-likelihood."""

    info_bits: np.ndarray
    codeword: np.ndarray
    loglik: float


def _beliefs_llr(spec, beliefs):
    if isinstance(beliefs, SoftVector):
        llr = beliefs.llr
    else:
        llr = np.asarray(beliefs, dtype=np.float64)
    if llr.ndim != 1 or llr.size != spec.n:
        raise ValueError(f"beliefs must have {spec.n} positions, got shape {llr.shape}")
    return llr


@lru_cache(maxsize=16)
def _codebook(spec):
    """(2**N, N) information words and their (2**N, n) codewords."""
    nbits = spec.dimension
    if nbits > MAX_ENUM_BITS:
        raise ValueError(
            f"refusing to enumerate 2**{nbits} codewords (limit 2**{MAX_ENUM_BITS})"
        )
    count = 1 << nbits
    if nbits:
        shifts = np.arange(nbits - 1, -1, -1)
        words = ((np.arange(count)[:, None] >> shifts) & 1).astype(np.uint8)
    else:
        words = np.zeros((1, 0), dtype=np.uint8)
    return words, encode(spec, words)


def codeword_loglik(codeword, beliefs):
    """Log-likelihood of one codeword: sum over positions of ln q if the bit
    is 0, else ln(1 - q)."""
    bits = np.asarray(codeword, dtype=np.float64)
    llr = np.asarray(beliefs.llr if isinstance(beliefs, SoftVector) else beliefs, dtype=np.float64)
    if bits.shape != llr.shape:
        raise ValueError(f"codeword shape {bits.shape} does not match beliefs shape {llr.shape}")
    return float(np.sum(log_expit((1.0 - 2.0 * bits) * llr)))


def likelihood_table(spec, beliefs):
    """Log-likelihood of every codeword, indexed by information-word integer."""
    llr = _beliefs_llr(spec, beliefs)
    _, codewords = _codebook(spec)
    logq = log_expit(llr)
    log1mq = log_expit(-llr)
    return logq.sum() + codewords.astype(np.float64) @ (log1mq - logq)


def ml_decode(spec, beliefs):
    """Exhaustive maximum-likelihood decision.

    Likelihood ties within METRIC_TIE_EPS go to the smaller information-word
    integer.
    """
    table = likelihood_table(spec, beliefs)
    words, codewords = _codebook(spec)
    top = float(table.max())
    winner = int(np.nonzero(table >= top - METRIC_TIE_EPS)[0][0])
    return MLResult(
        info_bits=words[winner].copy(),
        codeword=codewords[winner].copy(),
        loglik=float(table[winner]),
    )
