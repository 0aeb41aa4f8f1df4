"""Shared test oracles, independent of the library internals."""

import numpy as np

from rmpolar import CodeSpec, Path


def gf2_rank(matrix):
    """Rank over GF(2) by plain Gaussian elimination."""
    rows = [int("".join(str(int(b)) for b in row), 2) for row in np.asarray(matrix) % 2]
    rank = 0
    for bit in range(np.asarray(matrix).shape[1] - 1, -1, -1):
        pivot = None
        for i in range(rank, len(rows)):
            if (rows[i] >> bit) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and (rows[i] >> bit) & 1:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def eval_polynomial_oracle(spec, info_bits):
    """Evaluate the boolean polynomial named by (spec, bits) point by point.

    Pure-python, position p encodes (x1..xm) with x1 most significant.
    """
    m, n = spec.m, spec.n
    out = []
    for p in range(n):
        x = [(p >> (m - 1 - level)) & 1 for level in range(m)]
        acc = 0
        for path, bit in zip(spec.info_set, np.asarray(info_bits).astype(int)):
            if not bit:
                continue
            term = 1
            for xl, il in zip(x, path.bits):
                if il and not xl:
                    term = 0
                    break
            acc ^= term
        out.append(acc)
    return np.array(out, dtype=np.uint8)


def q_domain_reference_decode(spec, q):
    """Probability-domain recursion with normalized posteriors.

    Independent of the LLR implementation: the i=1 child belief comes from
    the offset product, the i=0 child belief from the normalized likelihood
    product given the decided symbols.  Returns (info_bits, info_posteriors).
    """
    info = spec.info_mask_by_leaf
    bits = []
    posts = []
    cursor = [0]

    def walk(qv):
        if qv.size == 1:
            s = cursor[0]
            cursor[0] += 1
            if info[s]:
                b = 1 if qv[0] < 0.5 else 0
                bits.append(b)
                posts.append(qv[0])
            else:
                b = 0
            return np.array([1.0 - 2.0 * b])
        h = qv.size // 2
        q0, q1 = qv[:h], qv[h:]
        g = (2.0 * q0 - 1.0) * (2.0 * q1 - 1.0)
        v = walk((1.0 + g) / 2.0)
        q1v = np.where(v > 0, q1, 1.0 - q1)
        num = q0 * q1v
        u = walk(num / (num + (1.0 - q0) * (1.0 - q1v)))
        return np.concatenate([u, u * v])

    walk(np.asarray(q, dtype=np.float64))
    return np.array(bits, dtype=np.uint8), np.array(posts)


def full_spec(m):
    """Every path informational."""
    return CodeSpec(m=m, info_set=tuple(Path.from_index(i, m) for i in range(1 << m)))


def random_spec(m, k, rng):
    """A uniformly random k-path information set."""
    chosen = rng.choice(1 << m, size=k, replace=False)
    return CodeSpec(m=m, info_set=tuple(Path.from_index(int(i), m) for i in chosen))


def leaf_bits_for(spec, info_bits):
    """Per-leaf bits (processing order) of the word named by info_bits."""
    coeff = np.zeros(spec.n, dtype=np.uint8)
    if spec.dimension:
        coeff[[p.index for p in spec.info_set]] = np.asarray(info_bits, dtype=np.uint8)
    return coeff[::-1]


def metric_replay(spec, llr, info_bits, frozen_metric="include"):
    """Recompute a path metric by one clean depth-first pass.

    Follows the decision path named by info_bits (frozen leaves at 0) and
    sums the log posterior of each decided bit.  Recursive and stateless, a
    cross-check for the iterative lazy-refresh bookkeeping.
    """
    from scipy.special import log_expit

    from rmpolar import combine_u_llr, combine_v_llr

    leaf = leaf_bits_for(spec, info_bits)
    info = spec.info_mask_by_leaf
    cursor = [0]
    total = [0.0]

    def walk(lam):
        if lam.size == 1:
            s = cursor[0]
            cursor[0] += 1
            b = int(leaf[s])
            if info[s] or frozen_metric == "include":
                total[0] += float(log_expit((1.0 - 2.0 * b) * lam[0]))
            return np.array([1.0 - 2.0 * b])
        h = lam.size // 2
        v = walk(combine_v_llr(lam[:h], lam[h:]))
        u = walk(combine_u_llr(lam[:h], lam[h:], v))
        return np.concatenate([u, u * v])

    walk(np.asarray(llr, dtype=np.float64))
    return total[0]


def all_hard_patterns(n):
    """Every +-1 observation vector of length n, as rows."""
    count = 1 << n
    shifts = np.arange(n - 1, -1, -1)
    bits = ((np.arange(count)[:, None] >> shifts) & 1).astype(np.float64)
    return 1.0 - 2.0 * bits
