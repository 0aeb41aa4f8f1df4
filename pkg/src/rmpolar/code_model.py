"""Path algebra, code specifications, and frozen-set constructions.

A code of length n = 2**m is organized by binary paths (i1, ..., im) through a
depth-m recursion tree.  Each path names one monomial x1**i1 * ... * xm**im in
m boolean variables; a code is fixed by the set T of paths that carry free
coefficients (the information set), every other coefficient being frozen to 0.
Choosing T by monomial degree gives the classic weight-rule codes; choosing it
by channel reliability gives bit-frozen subcodes tuned to a target channel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

__all__ = [
    "Path",
    "CodeSpec",
    "rm_dimension",
    "monomial_codeword",
    "bec_erasure_parameters",
    "freeze_rm",
    "freeze_bec",
    "freeze_montecarlo",
    "save_frozen_set",
    "load_frozen_set",
]


def rm_dimension(r, m):
    """Number of monomials of degree <= r in m variables: sum_{i<=r} C(m, i)."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if r < 0 or r > m:
        raise ValueError(f"order r must satisfy 0 <= r <= m, got r={r}, m={m}")
    return sum(math.comb(m, i) for i in range(r + 1))


@dataclass(frozen=True)
class Path:
    """A binary tuple (i1, ..., im) naming one leaf of the recursion tree.

    The path doubles as the exponent vector of the monomial
    x1**i1 * ... * xm**im.  Bit i1 is the most significant bit of the
    integer index, so sibling leaves differ in the last bit.
    """

    bits: tuple

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if len(bits) == 0:
            raise ValueError("a path needs at least one bit")
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"path bits must be 0/1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_index(cls, index, m):
        """Build the path whose integer index is `index` in an m-level tree."""
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        if index < 0 or index >= (1 << m):
            raise ValueError(f"index {index} out of range for m={m}")
        return cls(tuple((index >> (m - 1 - t)) & 1 for t in range(m)))

    @property
    def m(self):
        return len(self.bits)

    @property
    def weight(self):
        """Hamming weight, i.e. the degree of the named monomial."""
        return sum(self.bits)

    @property
    def index(self):
        """Integer index sum_l i_l * 2**(m-l) with i1 most significant."""
        idx = 0
        for b in self.bits:
            idx = (idx << 1) | b
        return idx

    def __str__(self):
        return "".join(str(b) for b in self.bits)


def monomial_codeword(path):
    """Evaluate the monomial named by `path` at every point of F_2^m.

    Returns a uint8 array of length 2**m.  Position p encodes the point
    (x1, ..., xm) through p = sum_l x_l * 2**(m-l), so the first half of the
    block is the x1 = 0 half.  The result has weight 2**(m - weight(path)).
    """
    m = path.m
    n = 1 << m
    positions = np.arange(n)
    word = np.ones(n, dtype=np.uint8)
    for level, bit in enumerate(path.bits, start=1):
        if bit:
            word &= ((positions >> (m - level)) & 1).astype(np.uint8)
    return word


@dataclass(frozen=True)
class CodeSpec:
    """A code of length 2**m fixed by its information set.

    `info_set` is stored sorted in canonical processing order, which is
    decreasing integer index: at every tree level the i=1 branch is handled
    strictly before the i=0 branch.  `rm_order` records the weight-rule order
    for codes built by :func:`freeze_rm`, else None.  It is advisory metadata:
    two specs with the same (m, info_set) compare equal regardless of it, and
    the frozen-set file format does not persist it.
    """

    m: int
    info_set: tuple
    rm_order: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        paths = tuple(self.info_set)
        for p in paths:
            if not isinstance(p, Path):
                raise ValueError(f"info_set entries must be Path, got {p!r}")
            if p.m != self.m:
                raise ValueError(f"path {p} has {p.m} bits, spec has m={self.m}")
        indices = [p.index for p in paths]
        if len(set(indices)) != len(indices):
            raise ValueError("info_set contains duplicate paths")
        ordered = tuple(sorted(paths, key=lambda p: -p.index))
        object.__setattr__(self, "info_set", ordered)

    @property
    def n(self):
        return 1 << self.m

    @property
    def dimension(self):
        return len(self.info_set)

    @cached_property
    def info_indices(self):
        """Information path indices, ascending (the on-disk order)."""
        return tuple(sorted(p.index for p in self.info_set))

    @cached_property
    def info_mask(self):
        """Boolean mask over path indices 0..n-1, True where informational."""
        mask = np.zeros(self.n, dtype=bool)
        mask[list(self.info_indices)] = True
        mask.setflags(write=False)
        return mask

    @cached_property
    def info_mask_by_leaf(self):
        """info_mask re-ordered by leaf processing step (decreasing index)."""
        mask = self.info_mask[::-1].copy()
        mask.setflags(write=False)
        return mask


def freeze_rm(r, m):
    """Weight-rule information set: keep every path of weight <= r.

    Parameters
    ----------
    r : int
        Largest monomial degree kept free, 0 <= r <= m.
    m : int
        Number of recursion levels; block length is 2**m.

    Returns
    -------
    CodeSpec with dimension rm_dimension(r, m).
    """
    k = rm_dimension(r, m)  # validates r, m
    paths = [Path.from_index(i, m) for i in range(1 << m)]
    info = tuple(p for p in paths if p.weight <= r)
    assert len(info) == k
    return CodeSpec(m=m, info_set=info, rm_order=r)


def bec_erasure_parameters(m, z):
    """Erasure parameter of every depth-m leaf channel of a BEC(z).

    One recursion level maps a parent parameter z to 2z - z**2 on the i=1
    branch (the degraded product combination) and z**2 on the i=0 branch (the
    upgraded combination).  Returns an array indexed by path index.
    """
    if not 0.0 <= z <= 1.0:
        raise ValueError(f"erasure parameter must lie in [0, 1], got {z}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    params = np.array([z], dtype=np.float64)
    for _ in range(m):
        nxt = np.empty(2 * params.size, dtype=np.float64)
        nxt[1::2] = 2.0 * params - params * params
        nxt[0::2] = params * params
        params = nxt
    return params


def freeze_bec(m, k, z):
    """Erasure-designed information set: the k most reliable leaf channels.

    Parameters
    ----------
    m : int
        Number of recursion levels.
    k : int
        Target dimension, 0 <= k <= 2**m.
    z : float
        Design erasure probability of the reference erasure channel.

    Returns
    -------
    CodeSpec holding the k paths with the smallest erasure parameter,
    ties broken toward the smaller path index.
    """
    n = 1 << m
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    params = bec_erasure_parameters(m, z)
    order = np.lexsort((np.arange(n), params))
    chosen = sorted(int(i) for i in order[:k])
    info = tuple(Path.from_index(i, m) for i in chosen)
    return CodeSpec(m=m, info_set=info)


def freeze_montecarlo(m, k, channel, trials, seed=0):
    """Information set estimated by genie-aided decoding of random frames.

    Runs `trials` transmissions of random full-rate codewords over `channel`,
    decodes each with every earlier decision corrected to the truth, and
    tallies how often the raw decision at each leaf is wrong.  The k paths
    with the lowest estimated error rate form the information set, ties broken
    toward the smaller path index.  Deterministic for a given (seed, trials).
    """
    from .channel import modulate, posteriors, transmit
    from .encoder import encode
    from .sc_decoder import genie_error_counts

    n = 1 << m
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")

    full = CodeSpec(m=m, info_set=tuple(Path.from_index(i, m) for i in range(n)))
    rng = np.random.default_rng(seed)
    errors = np.zeros(n, dtype=np.int64)  # by leaf step
    batch = 4096
    done = 0
    while done < trials:
        b = min(batch, trials - done)
        words = rng.integers(0, 2, size=(b, n), dtype=np.uint8)
        sent = modulate(encode(full, words))
        received = transmit(channel, sent, rng)
        llr = posteriors(channel, received)
        errors += genie_error_counts(full, llr, words)
        done += b

    rates_by_leaf = errors / float(trials)
    rates_by_index = rates_by_leaf[::-1]  # leaf step s holds index n-1-s
    order = np.lexsort((np.arange(n), rates_by_index))
    chosen = sorted(int(i) for i in order[:k])
    info = tuple(Path.from_index(i, m) for i in chosen)
    return CodeSpec(m=m, info_set=info)


def save_frozen_set(spec, path):
    """Write `spec` to a frozen-set file.

    Line 1 is ``m=<m> k=<k>``; then one ascending decimal path index per line;
    newline-terminated lines, no trailing whitespace.
    """
    lines = [f"m={spec.m} k={spec.dimension}"]
    lines.extend(str(i) for i in spec.info_indices)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_frozen_set(path):
    """Read a frozen-set file written by :func:`save_frozen_set`."""
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ValueError(f"{path}: empty frozen-set file")
    head = lines[0].split()
    try:
        fields = dict(part.split("=", 1) for part in head)
        m = int(fields["m"])
        k = int(fields["k"])
    except (ValueError, KeyError) as exc:
        raise ValueError(f"{path}: malformed header {lines[0]!r}") from exc
    body = [ln for ln in lines[1:] if ln]
    if len(body) != k:
        raise ValueError(f"{path}: header says k={k} but {len(body)} index lines follow")
    indices = [int(ln) for ln in body]
    if indices != sorted(indices):
        raise ValueError(f"{path}: index lines must be ascending")
    info = tuple(Path.from_index(i, m) for i in indices)
    return CodeSpec(m=m, info_set=info)
