"""Channel models, modulation, and soft-belief containers.

Belief convention: q is the posterior probability that a position carries the
+1 symbol, i.e. bit 0.  Derived views are the offset g = 2q - 1 (the expected
symbol), the likelihood ratio h = q / (1 - q), and the log ratio
llr = ln(h), clamped to +-LLR_CLAMP.  LLR is the canonical stored domain; the
other views are computed on demand.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit

__all__ = [
    "LLR_CLAMP",
    "Channel",
    "SoftVector",
    "modulate",
    "transmit",
    "posteriors",
    "parse_channel",
]

LLR_CLAMP = 40.0

_KINDS = ("bsc", "bec", "awgn")


@dataclass(frozen=True)
class Channel:
    """A memoryless binary-input channel.

    kind is one of 'bsc' (param = crossover probability), 'bec' (param =
    erasure probability), 'awgn' (param = noise standard deviation for
    unit-energy +-1 symbols).
    """

    kind: str
    param: float

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown channel kind {self.kind!r}, expected one of {_KINDS}")
        if self.kind in ("bsc", "bec"):
            if not 0.0 <= self.param <= 1.0:
                raise ValueError(f"{self.kind} parameter must lie in [0, 1], got {self.param}")
            if self.kind == "bsc" and self.param >= 0.5:
                raise ValueError(f"bsc crossover must be < 0.5, got {self.param}")
        else:
            if self.param <= 0.0:
                raise ValueError(f"awgn sigma must be positive, got {self.param}")

    @classmethod
    def bsc(cls, p):
        return cls("bsc", float(p))

    @classmethod
    def bec(cls, eps):
        return cls("bec", float(eps))

    @classmethod
    def awgn(cls, sigma):
        return cls("awgn", float(sigma))


def modulate(codeword):
    """Map bits to antipodal symbols, bit b -> (-1)**b, as float64."""
    bits = np.asarray(codeword)
    return 1.0 - 2.0 * bits.astype(np.float64)


def transmit(channel, symbols, rng):
    """Pass +-1 symbols through `channel` using the generator `rng`.

    BSC flips the sign of each symbol with probability p.  BEC replaces a
    symbol by 0.0 (the erasure mark) with probability eps.  AWGN adds
    N(0, sigma**2) noise.  Shapes are preserved.
    """
    symbols = np.asarray(symbols, dtype=np.float64)
    if channel.kind == "bsc":
        flips = rng.random(symbols.shape) < channel.param
        return np.where(flips, -symbols, symbols)
    if channel.kind == "bec":
        erased = rng.random(symbols.shape) < channel.param
        return np.where(erased, 0.0, symbols)
    return symbols + rng.normal(0.0, channel.param, size=symbols.shape)


def posteriors(channel, observed):
    """Per-position posterior beliefs for channel outputs `observed`.

    Returns a SoftVector for 1-d input; for a batch (trials, n) returns the
    raw clamped LLR matrix (positive favors bit 0).
    """
    y = np.asarray(observed, dtype=np.float64)
    if channel.kind == "bsc":
        p = channel.param
        if p == 0.0:
            mag = LLR_CLAMP
        else:
            mag = min(np.log((1.0 - p) / p), LLR_CLAMP)
        llr = np.sign(y) * mag
    elif channel.kind == "bec":
        llr = np.sign(y) * LLR_CLAMP
    else:
        llr = 2.0 * y / (channel.param ** 2)
    llr = np.clip(llr, -LLR_CLAMP, LLR_CLAMP)
    if llr.ndim == 1:
        return SoftVector(llr)
    return llr


class SoftVector:
    """A block of per-position beliefs stored in the LLR domain.

    Supports the double index (i, j): half i of a length-len block is the
    slice [i*len/2 : (i+1)*len/2], i.e. flat index i*(len/2) + j.
    """

    __slots__ = ("llr",)

    def __init__(self, llr):
        arr = np.array(llr, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError(f"beliefs must be a non-empty 1-d array, got shape {arr.shape}")
        np.clip(arr, -LLR_CLAMP, LLR_CLAMP, out=arr)
        arr.setflags(write=False)
        self.llr = arr

    @classmethod
    def from_q(cls, q):
        """Build from posterior probabilities of bit 0; q in [0, 1]."""
        q = np.asarray(q, dtype=np.float64)
        if np.any((q < 0.0) | (q > 1.0)):
            raise ValueError("q values must lie in [0, 1]")
        with np.errstate(divide="ignore"):
            llr = np.log(q) - np.log1p(-q)
        return cls(np.clip(llr, -LLR_CLAMP, LLR_CLAMP))

    @classmethod
    def from_llr(cls, llr):
        return cls(llr)

    @property
    def q(self):
        """Posterior probability of the +1 symbol (bit 0)."""
        return expit(self.llr)

    @property
    def g(self):
        """Offset view 2q - 1, the conditional expectation of the symbol."""
        return np.tanh(self.llr / 2.0)

    @property
    def h(self):
        """Likelihood-ratio view q / (1 - q)."""
        return np.exp(self.llr)

    def half(self, i):
        """The i-th half block (i in {0, 1}) as a read-only LLR array."""
        if i not in (0, 1):
            raise ValueError(f"half index must be 0 or 1, got {i}")
        mid = self.llr.size // 2
        return self.llr[:mid] if i == 0 else self.llr[mid:]

    def __len__(self):
        return self.llr.size

    def __repr__(self):
        return f"SoftVector(len={self.llr.size})"


def parse_channel(text, rate=None):
    """Parse a CLI channel token: 'bsc:0.1', 'bec:0.3', or 'awgn:2.0dB'.

    The awgn form gives Eb/N0 in dB and needs the code rate to fix sigma
    through sigma = (2 * rate * 10**(EbN0/10))**-0.5.

    Returns (Channel, display_param) where display_param is the number as
    written (the dB value for awgn).
    """
    text = text.strip()
    if ":" not in text:
        raise ValueError(f"channel token {text!r} must look like kind:param")
    kind, _, value = text.partition(":")
    kind = kind.lower()
    if kind == "bsc":
        p = float(value)
        return Channel.bsc(p), p
    if kind == "bec":
        eps = float(value)
        return Channel.bec(eps), eps
    if kind == "awgn":
        if not value.lower().endswith("db"):
            raise ValueError(f"awgn parameter must end in 'dB', got {value!r}")
        ebn0_db = float(value[:-2])
        if rate is None:
            raise ValueError("awgn channels need the code rate to fix sigma")
        if rate <= 0.0:
            raise ValueError(f"code rate must be positive, got {rate}")
        sigma = (2.0 * rate * 10.0 ** (ebn0_db / 10.0)) ** -0.5
        return Channel.awgn(sigma), ebn0_db
    raise ValueError(f"unknown channel kind {kind!r}")
