"""Exact information-theoretic quantities on fully known distributions.

All public values are in bits (base-2 logs).  Sums over probability cells
use ``math.fsum``, so results are exactly rounded and invariant under
argument reordering.  The convention 0*log(0) = 0 applies throughout;
pointwise mutual information of a zero joint cell is flagged as ``-inf``
rather than raised, since its expectation weight is zero.
"""

from __future__ import annotations

import math
from typing import Literal

import numpy as np

from .distributions import (
    Exponential,
    FiniteDistribution,
    JointTable,
    Normal,
    ParametricModel,
)
from .errors import (
    AxisOutOfRange,
    DegenerateEntropy,
    FamilyMismatch,
    InvalidParameter,
    NonStochasticChannel,
    UnsupportedFamily,
    ZeroMarginal,
    ZeroProbability,
)

Bits = float

LN2 = math.log(2.0)


def information_content(p: float) -> Bits:
    """-log2(p), the surprise of an event of probability ``p`` in (0, 1]."""
    if p == 0:
        raise ZeroProbability("information content diverges for probability 0")
    if not 0.0 < p <= 1.0:
        raise InvalidParameter(f"probability must be in (0, 1], got {p}")
    return -math.log2(p)


def _entropy_of(mass: np.ndarray) -> Bits:
    return -math.fsum(p * math.log2(p) for p in mass.flat if p > 0.0)


def entropy(dist: FiniteDistribution | JointTable) -> Bits:
    """Shannon entropy -sum p log2 p in bits."""
    return _entropy_of(dist.mass)


def joint_entropy(joint: JointTable) -> Bits:
    """Entropy of the flattened joint table."""
    return _entropy_of(joint.mass)


def conditional_entropy(joint: JointTable, target_axis: int) -> Bits:
    """H(target | other axis) = H(joint) - H(other marginal), rank 2 only."""
    if joint.rank != 2:
        raise AxisOutOfRange(f"conditional entropy needs rank 2, got {joint.rank}")
    if target_axis not in (0, 1):
        raise AxisOutOfRange(f"target_axis must be 0 or 1, got {target_axis}")
    other = joint.mass.sum(axis=target_axis)
    return joint_entropy(joint) - _entropy_of(other)


def pmi(joint: JointTable, x: int, y: int) -> Bits:
    """Pointwise mutual information log2[P(x,y) / (P(x)P(y))] of one cell.

    Returns ``-inf`` for a zero joint cell with positive marginals.
    """
    if joint.rank != 2:
        raise AxisOutOfRange(f"pmi needs a rank-2 joint, got {joint.rank}")
    px = joint.mass.sum(axis=1)[x]
    py = joint.mass.sum(axis=0)[y]
    if px == 0.0 or py == 0.0:
        raise ZeroMarginal(f"marginal probability of cell ({x}, {y}) is zero")
    pxy = joint.mass[x, y]
    if pxy == 0.0:
        return -math.inf
    return math.log2(pxy / (px * py))


def _mi_terms(mass: np.ndarray):
    px = mass.sum(axis=1)
    py = mass.sum(axis=0)
    for i in range(mass.shape[0]):
        for j in range(mass.shape[1]):
            p = mass[i, j]
            if p > 0.0:
                yield p * math.log2(p / (px[i] * py[j]))


def mutual_information(joint: JointTable) -> Bits:
    """I(X;Y) as the expectation of the pointwise mutual information."""
    if joint.rank != 2:
        raise AxisOutOfRange(f"mutual information needs rank 2, got {joint.rank}")
    return math.fsum(_mi_terms(joint.mass))


def _mi_raw(mass: np.ndarray) -> Bits:
    return math.fsum(_mi_terms(mass))


def conditional_mutual_information(joint: JointTable, condition_axis: int = 2) -> Bits:
    """I(A;B | C) for a rank-3 joint, averaging slice MI over the condition."""
    if joint.rank != 3:
        raise AxisOutOfRange(f"conditional MI needs rank 3, got {joint.rank}")
    if not 0 <= condition_axis < 3:
        raise AxisOutOfRange(f"condition_axis must be 0..2, got {condition_axis}")
    pz = joint.mass.sum(axis=tuple(i for i in range(3) if i != condition_axis))
    total = 0.0
    for z in range(joint.shape[condition_axis]):
        if pz[z] > 0.0:
            sliced = np.take(joint.mass, z, axis=condition_axis) / pz[z]
            total += pz[z] * _mi_raw(sliced)
    return total


MULTI_INFORMATION_MAX_RANK = 6


def _multi_raw(mass: np.ndarray) -> Bits:
    if mass.ndim == 2:
        return _mi_raw(mass)
    # peel off the last variable: I(X1;..;Xn) = I(X1;..;Xn-1) - E_Xn[I(X1;..;Xn-1)|Xn]
    head = _multi_raw(mass.sum(axis=-1))
    pz = mass.sum(axis=tuple(range(mass.ndim - 1)))
    cond = 0.0
    for z in range(mass.shape[-1]):
        if pz[z] > 0.0:
            cond += pz[z] * _multi_raw(mass[..., z] / pz[z])
    return head - cond


def multi_information(joint: JointTable) -> Bits:
    """Interaction information by the peel-one-variable recursion; may be negative.

    The recursion is exponential in rank, so tables above rank
    ``MULTI_INFORMATION_MAX_RANK`` are rejected.
    """
    if joint.rank < 3:
        raise AxisOutOfRange(f"multi-information needs rank >= 3, got {joint.rank}")
    if joint.rank > MULTI_INFORMATION_MAX_RANK:
        raise InvalidParameter(
            f"rank {joint.rank} exceeds the guard of {MULTI_INFORMATION_MAX_RANK}"
        )
    return _multi_raw(joint.mass)


def kl_divergence(p: FiniteDistribution, q: FiniteDistribution) -> Bits:
    """D(p || q) in bits; ``inf`` where p puts mass outside q's support."""
    if p.alphabet_size != q.alphabet_size:
        raise InvalidParameter("distributions must share one alphabet")
    if np.any((p.mass > 0.0) & (q.mass == 0.0)):
        return math.inf
    return math.fsum(
        pi * math.log2(pi / qi) for pi, qi in zip(p.mass, q.mass) if pi > 0.0
    )


def cross_entropy(p: FiniteDistribution, q: FiniteDistribution) -> Bits:
    """-E_p[log2 q]; equals H(p) + D(p || q)."""
    if p.alphabet_size != q.alphabet_size:
        raise InvalidParameter("distributions must share one alphabet")
    if np.any((p.mass > 0.0) & (q.mass == 0.0)):
        return math.inf
    return -math.fsum(pi * math.log2(qi) for pi, qi in zip(p.mass, q.mass) if pi > 0.0)


def kl_closed_form(p: ParametricModel, q: ParametricModel) -> Bits:
    """Closed-form KL divergence for same-family normal or exponential pairs.

    Evaluated in nats and converted, as the closed forms are natural-log
    expressions.
    """
    if type(p) is not type(q):
        raise FamilyMismatch(f"families differ: {type(p).__name__} vs {type(q).__name__}")
    if isinstance(p, Normal):
        ratio = p.var / q.var
        nats = (p.mu - q.mu) ** 2 / (2.0 * q.var) + 0.5 * (ratio - math.log(ratio) - 1.0)
        return nats / LN2
    if isinstance(p, Exponential):
        nats = math.log(p.lam) - math.log(q.lam) + q.lam / p.lam - 1.0
        return nats / LN2
    raise UnsupportedFamily(f"no closed form for {type(p).__name__}")


def mi_as_kl(joint: JointTable) -> Bits:
    """I(X;Y) computed as D(joint || product of marginals)."""
    if joint.rank != 2:
        raise AxisOutOfRange(f"needs rank 2, got {joint.rank}")
    product = np.outer(joint.mass.sum(axis=1), joint.mass.sum(axis=0))
    return math.fsum(
        p * math.log2(p / q)
        for p, q in zip(joint.mass.flat, product.flat)
        if p > 0.0
    )


NormalizedVariant = Literal["constraint", "uncertainty", "symmetric_uncertainty", "redundancy"]


def normalized_mi(joint: JointTable, variant: NormalizedVariant) -> float:
    """Entropy-normalized mutual information, in [0, 1].

    ``constraint`` divides by H(Y), ``uncertainty`` by H(X),
    ``symmetric_uncertainty`` is the entropy-weighted mean of the two, and
    ``redundancy`` divides by H(X) + H(Y) (so it tops out at 1/2).
    """
    if joint.rank != 2:
        raise AxisOutOfRange(f"needs rank 2, got {joint.rank}")
    mi = mutual_information(joint)
    hx = _entropy_of(joint.mass.sum(axis=1))
    hy = _entropy_of(joint.mass.sum(axis=0))
    if variant == "constraint":
        if hy == 0.0:
            raise DegenerateEntropy("H(Y) = 0")
        return mi / hy
    if variant == "uncertainty":
        if hx == 0.0:
            raise DegenerateEntropy("H(X) = 0")
        return mi / hx
    if variant == "symmetric_uncertainty":
        if hx + hy == 0.0:
            raise DegenerateEntropy("H(X) + H(Y) = 0")
        return 2.0 * mi / (hx + hy)
    if variant == "redundancy":
        if hx + hy == 0.0:
            raise DegenerateEntropy("H(X) + H(Y) = 0")
        return mi / (hx + hy)
    raise InvalidParameter(f"unknown variant {variant!r}")


def blahut_arimoto(
    channel: np.ndarray,
    tolerance: float = 1e-9,
    max_iter: int = 10_000,
) -> tuple[Bits, np.ndarray, list[Bits]]:
    """Alternating maximization of I(input; output) over input distributions.

    ``channel`` is row-stochastic P(y|x).  Returns the achieved rate in
    bits, the maximizing input distribution, and the per-iteration lower
    bounds (nondecreasing).  Stops once the standard capacity bracket
    ``max_x D(P(.|x) || output) - I`` falls below ``tolerance``.
    """
    w = np.asarray(channel, dtype=float)
    if w.ndim != 2 or w.shape[0] < 1:
        raise NonStochasticChannel("channel must be a 2-d matrix")
    if np.any(w < 0) or np.any(np.abs(w.sum(axis=1) - 1.0) > 1e-9):
        raise NonStochasticChannel("channel rows must be distributions summing to 1")
    if tolerance <= 0:
        raise InvalidParameter(f"tolerance must be positive, got {tolerance}")

    n_in = w.shape[0]
    r = np.full(n_in, 1.0 / n_in)
    logw = np.where(w > 0.0, np.log(np.where(w > 0.0, w, 1.0)), 0.0)
    lower_bounds: list[Bits] = []
    for _ in range(max_iter):
        out = r @ w
        # d[x] = D(W(.|x) || out) in nats; rows of w with zero cells contribute 0 there
        with np.errstate(divide="ignore"):
            logout = np.where(out > 0.0, np.log(np.where(out > 0.0, out, 1.0)), 0.0)
        d = ((logw - logout[None, :]) * w).sum(axis=1)
        rate = float(r @ d)
        lower_bounds.append(rate / LN2)
        gap = float(d.max() - rate)
        if gap / LN2 < tolerance:
            break
        r = r * np.exp(d - d.max())
        r /= r.sum()
    return lower_bounds[-1], r, lower_bounds


def channel_capacity(
    channel: np.ndarray,
    tolerance: float = 1e-9,
    max_iter: int = 10_000,
) -> tuple[Bits, FiniteDistribution]:
    """Channel capacity of a discrete memoryless channel P(y|x), in bits.

    The returned input distribution achieves mutual information within
    ``tolerance`` of the capacity.
    """
    capacity, r, _ = blahut_arimoto(channel, tolerance, max_iter)
    return capacity, FiniteDistribution(r)


def transfer_entropy_exact(joint: JointTable) -> Bits:
    """Directed information rate for a known embedding joint.

    ``joint`` must be rank 3 with axes (next state of the target, collapsed
    target history, collapsed source history).  Equals the conditional
    mutual information I(next; source history | target history).
    """
    if joint.rank != 3:
        raise AxisOutOfRange(f"needs rank 3 (next, target history, source history), got {joint.rank}")
    mass = joint.mass
    p_next_hist = mass.sum(axis=2)
    p_hist = mass.sum(axis=(0, 2))
    p_hist_src = mass.sum(axis=0)
    terms = []
    for a, b, c in zip(*np.nonzero(mass > 0.0)):
        p = mass[a, b, c]
        cond_full = p / p_hist_src[b, c]
        cond_hist = p_next_hist[a, b] / p_hist[b]
        terms.append(p * math.log2(cond_full / cond_hist))
    return math.fsum(terms)


def differential_entropy_closed_form(model: ParametricModel) -> Bits:
    """Differential entropy, normal family only: half log2(2*pi*e*var)."""
    if isinstance(model, Normal):
        return 0.5 * math.log2(2.0 * math.pi * math.e * model.var)
    raise UnsupportedFamily(f"no closed form for {type(model).__name__}")
