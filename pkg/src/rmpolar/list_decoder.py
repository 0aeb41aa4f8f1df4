"""Successive-cancellation list decoding.

The decoder advances leaf by leaf in processing order, keeping up to L live
hypotheses.  Each hypothesis owns references to per-level belief blocks and
decided-symbol blocks; forking a hypothesis shares every block, and an update
rebinds the block reference instead of mutating, so siblings keep structural
sharing and dead blocks are reclaimed by reference counting.  With block
lengths 2**(m-level) the total work stays within a constant of
L * n * log2(n) kernel evaluations.

At an information leaf every hypothesis forks on the two bit values, the
metric of each child growing by the log posterior of its bit; at a frozen
leaf the single bit-0 extension either collects the same log posterior
(frozen_metric='include', the default) or nothing ('ignore').  The pool is
then cut back to the L best metrics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import log_expit

from .channel import SoftVector
from .encoder import info_bits_to_int
from .sc_decoder import OpCounter, combine_u_llr, combine_v_llr

__all__ = [
    "METRIC_TIE_EPS",
    "Extension",
    "Candidate",
    "ListResult",
    "extend_leaf",
    "select_top",
    "list_decode",
]

# Metric gaps below this are treated as exact ties (which arise routinely on
# hard-decision channels) and resolved toward the smaller information word.
METRIC_TIE_EPS = 1e-9

_FROZEN_METRIC_MODES = ("include", "ignore")


@dataclass
class Extension:
    """One candidate extension: parent rank, appended bit, updated metric."""

    parent: int
    bit: int
    metric: float


@dataclass
class Candidate:
    """A ranked decoding hypothesis in a ListResult."""

    info_bits: np.ndarray
    codeword: np.ndarray
    metric: float


@dataclass
class ListResult:
    """Candidates ranked by metric descending; rank 1 is the decision."""

    candidates: list
    kernel_ops: int
    select_ops: int

    @property
    def best(self):
        return self.candidates[0]


def extend_leaf(metrics, leaf_llrs, frozen, frozen_metric="include"):
    """Extend every candidate through one leaf.

    Parameters
    ----------
    metrics : per-candidate log metrics, in rank order.
    leaf_llrs : per-candidate leaf belief (positive favors bit 0).
    frozen : whether the leaf is frozen to bit 0.
    frozen_metric : 'include' adds the bit-0 log posterior at frozen leaves,
        'ignore' leaves the metric unchanged there.

    Returns the extension pool: one bit-0 entry per candidate at a frozen
    leaf, otherwise both bit extensions per candidate.
    """
    if frozen_metric not in _FROZEN_METRIC_MODES:
        raise ValueError(f"frozen_metric must be one of {_FROZEN_METRIC_MODES}, got {frozen_metric!r}")
    if len(metrics) != len(leaf_llrs):
        raise ValueError("metrics and leaf_llrs must have one entry per candidate")
    pool = []
    for rank, (metric, lam) in enumerate(zip(metrics, leaf_llrs)):
        if frozen:
            delta = float(log_expit(lam)) if frozen_metric == "include" else 0.0
            pool.append(Extension(rank, 0, metric + delta))
        else:
            pool.append(Extension(rank, 0, metric + float(log_expit(lam))))
            pool.append(Extension(rank, 1, metric + float(log_expit(-lam))))
    return pool


def select_top(pool, limit, counter=None):
    """Keep the `limit` best extensions, re-ranked by metric descending.

    Ties go to the earlier parent rank, then to bit 0.  A pool no larger
    than `limit` passes through (re-ranked).
    """
    if limit < 1:
        raise ValueError(f"list size must be >= 1, got {limit}")
    if counter is not None:
        counter.select += len(pool)
    return sorted(pool, key=lambda e: (-e.metric, e.parent, e.bit))[:limit]


class _Hypothesis:
    """Live decoder state: shared belief/symbol blocks plus the bit trail."""

    __slots__ = ("bel", "vsym", "metric", "trail", "code_syms")

    def __init__(self, bel, vsym, metric, trail):
        self.bel = bel      # bel[0] is the channel block, bel[lvl] level-lvl beliefs
        self.vsym = vsym    # vsym[lvl] decided symbols of the pending i=1 child
        self.metric = metric
        self.trail = trail  # cons list of info-leaf bits, newest first
        self.code_syms = None


def _refresh(hyp, j, m, counter):
    """Bring hyp.bel[m] up to date for leaf step j."""
    if j == 0:
        lam = hyp.bel[0]
        start = 1
    else:
        tz = (j & -j).bit_length() - 1
        start = m - tz
        base = hyp.bel[start - 1]
        h = 1 << (m - start)
        counter.kernel += h
        lam = combine_u_llr(base[:h], base[h:], hyp.vsym[start])
        hyp.bel[start] = lam
        start += 1
    for lvl in range(start, m + 1):
        h = 1 << (m - lvl)
        counter.kernel += h
        lam = combine_v_llr(lam[:h], lam[h:])
        hyp.bel[lvl] = lam


def _propagate(hyp, j, m, bit):
    """Fold the decided leaf symbol back up the completed subtrees."""
    cur = np.array([1.0 - 2.0 * bit])
    d = m
    while d >= 1 and (j >> (m - d)) & 1:
        cur = np.concatenate([cur, cur * hyp.vsym[d]])
        d -= 1
    if d >= 1:
        hyp.vsym[d] = cur
    else:
        hyp.code_syms = cur


def _fork(parent, bit, metric, is_info, deep_copy):
    trail = (parent.trail, bit) if is_info else parent.trail
    if deep_copy:
        bel = [parent.bel[0]] + [None if b is None else b.copy() for b in parent.bel[1:]]
        vsym = [None if s is None else s.copy() for s in parent.vsym]
    else:
        bel = parent.bel.copy()
        vsym = parent.vsym.copy()
    return _Hypothesis(bel, vsym, metric, trail)


def _unwind(trail, count):
    bits = np.zeros(count, dtype=np.uint8)
    pos = count - 1
    while trail is not None:
        trail, bit = trail[0], trail[1]
        bits[pos] = bit
        pos -= 1
    return bits


def list_decode(spec, beliefs, list_size, frozen_metric="include", _deep_copy=False):
    """List-decode one frame of channel beliefs under `spec`.

    Parameters
    ----------
    spec : CodeSpec
    beliefs : SoftVector of length spec.n.
    list_size : maximum number of live hypotheses L >= 1.
    frozen_metric : see :func:`extend_leaf`.  With 'include' and
        list_size >= 2**N the rank-1 candidate is a maximum-likelihood
        decision.
    _deep_copy : internal; fork by copying every block instead of sharing
        (same outputs, used to cross-check the sharing discipline).

    Returns
    -------
    ListResult with at most list_size candidates, ranked by metric
    descending; metric ties within METRIC_TIE_EPS of the best resolve the
    rank-1 slot toward the smaller information-word integer.
    """
    if list_size < 1:
        raise ValueError(f"list size must be >= 1, got {list_size}")
    if frozen_metric not in _FROZEN_METRIC_MODES:
        raise ValueError(f"frozen_metric must be one of {_FROZEN_METRIC_MODES}, got {frozen_metric!r}")
    if isinstance(beliefs, SoftVector):
        llr0 = beliefs.llr
    else:
        llr0 = np.asarray(beliefs, dtype=np.float64)
    if llr0.ndim != 1 or llr0.size != spec.n:
        raise ValueError(f"beliefs must have {spec.n} positions, got shape {llr0.shape}")

    n, m = spec.n, spec.m
    info_by_leaf = spec.info_mask_by_leaf
    counter = OpCounter()
    root = _Hypothesis([llr0] + [None] * m, [None] * (m + 1), 0.0, None)
    live = [root]

    for j in range(n):
        for hyp in live:
            _refresh(hyp, j, m, counter)
        pool = extend_leaf(
            [hyp.metric for hyp in live],
            [float(hyp.bel[m][0]) for hyp in live],
            frozen=not info_by_leaf[j],
            frozen_metric=frozen_metric,
        )
        survivors = select_top(pool, list_size, counter=counter)
        next_live = []
        for ext in survivors:
            child = _fork(live[ext.parent], ext.bit, ext.metric, info_by_leaf[j], _deep_copy)
            _propagate(child, j, m, ext.bit)
            next_live.append(child)
        live = next_live

    ranked = []
    for hyp in live:
        bits = _unwind(hyp.trail, spec.dimension)
        codeword = (hyp.code_syms < 0.0).astype(np.uint8)
        ranked.append((hyp.metric, info_bits_to_int(bits), bits, codeword))
    ranked.sort(key=lambda t: (-t[0], t[1]))
    top_metric = ranked[0][0]
    best = min(
        (t for t in ranked if t[0] >= top_metric - METRIC_TIE_EPS),
        key=lambda t: t[1],
    )
    ranked.remove(best)
    ranked.insert(0, best)

    return ListResult(
        candidates=[Candidate(info_bits=t[2], codeword=t[3], metric=t[0]) for t in ranked],
        kernel_ops=counter.kernel,
        select_ops=counter.select,
    )
