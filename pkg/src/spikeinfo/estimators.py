"""Histogram-based estimators of entropy, mutual information, and transfer
entropy, with Miller-Madow and jackknife bias corrections.

Estimates are plug-in values on empirical frequencies and inherit their
biases: entropy estimates are negatively biased, mutual-information and
transfer-entropy estimates positively.  The corrections shrink, but do not
remove, the entropy bias.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from . import measures
from .distributions import JointTable
from .errors import (
    DegenerateRange,
    EmptySample,
    InsufficientData,
    InvalidParameter,
    LengthMismatch,
    OutOfRangeSample,
    SeriesTooShort,
)
from .measures import LN2, Bits
from .processes import SymbolSeries

TE_TABLE_CELL_GUARD = 2**24


@dataclass(frozen=True)
class DiscreteBinning:
    """Identity binning of integer samples onto ``0 .. bins-1``."""

    bins: int

    def __post_init__(self):
        if self.bins < 1:
            raise DegenerateRange(f"bin count must be >= 1, got {self.bins}")


@dataclass(frozen=True)
class EqualWidthBinning:
    """``bins`` equal-width cells over [lo, hi]; the last cell is closed at hi."""

    bins: int
    lo: float
    hi: float

    def __post_init__(self):
        if self.bins < 1:
            raise DegenerateRange(f"bin count must be >= 1, got {self.bins}")
        if not self.lo < self.hi:
            raise DegenerateRange(f"need lo < hi, got [{self.lo}, {self.hi}]")


Binning = Union[DiscreteBinning, EqualWidthBinning]


@dataclass(frozen=True, eq=False)
class Histogram:
    counts: np.ndarray
    binning: Binning

    @property
    def bins(self) -> int:
        return self.counts.shape[0]

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def occupied(self) -> int:
        return int((self.counts > 0).sum())

    @property
    def frequencies(self) -> np.ndarray:
        """Relative frequencies, the maximum-likelihood cell estimates."""
        return self.counts / self.counts.sum()


@dataclass(frozen=True)
class EstimatorResult:
    """An estimate in bits plus the metadata needed to judge it.

    ``correction`` is the bias term added on top of the plain plug-in
    value, so ``value == mle_value + correction`` for the corrected
    methods.
    """

    value: Bits
    method: str  # "MLE" | "MillerMadow" | "Jackknife"
    n: int
    bins: int
    occupied_bins: int
    correction: Bits = 0.0


def build_histogram(samples: Sequence[float], binning: Binning) -> Histogram:
    """Count samples per bin.

    Discrete binning requires integer samples inside the alphabet;
    equal-width binning rejects samples outside [lo, hi] and assigns a
    sample at exactly ``hi`` to the last bin.
    """
    x = np.asarray(samples, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise EmptySample("samples must be a nonempty 1-d sequence")
    if isinstance(binning, DiscreteBinning):
        if np.any(x != np.floor(x)):
            raise OutOfRangeSample("discrete binning requires integer samples")
        xi = x.astype(np.int64)
        if xi.min() < 0 or xi.max() >= binning.bins:
            raise OutOfRangeSample(
                f"samples outside the alphabet [0, {binning.bins})"
            )
        counts = np.bincount(xi, minlength=binning.bins)
    else:
        if x.min() < binning.lo or x.max() > binning.hi:
            raise OutOfRangeSample(
                f"samples outside the range [{binning.lo}, {binning.hi}]"
            )
        width = (binning.hi - binning.lo) / binning.bins
        idx = np.floor((x - binning.lo) / width).astype(np.int64)
        idx = np.minimum(idx, binning.bins - 1)  # value == hi lands in the last bin
        counts = np.bincount(idx, minlength=binning.bins)
    counts.flags.writeable = False
    return Histogram(counts=counts, binning=binning)


def _entropy_from_counts(counts: np.ndarray, total: int) -> Bits:
    return -math.fsum(
        (c / total) * math.log2(c / total) for c in counts if c > 0
    )


def entropy_mle(hist: Histogram) -> EstimatorResult:
    """Plug-in entropy of the relative frequencies."""
    n = hist.total
    if n < 1:
        raise EmptySample("histogram holds no samples")
    value = _entropy_from_counts(hist.counts, n)
    return EstimatorResult(
        value=value, method="MLE", n=n, bins=hist.bins, occupied_bins=hist.occupied
    )


def entropy_miller_madow(hist: Histogram) -> EstimatorResult:
    """Plug-in entropy plus the (occupied - 1) / 2N first-order bias term.

    The correction comes from a natural-log expansion, so it is computed
    in nats and converted.
    """
    base = entropy_mle(hist)
    correction = (hist.occupied - 1) / (2.0 * base.n) / LN2
    return EstimatorResult(
        value=base.value + correction,
        method="MillerMadow",
        n=base.n,
        bins=base.bins,
        occupied_bins=base.occupied_bins,
        correction=correction,
    )


def entropy_jackknife(samples: Sequence[float], binning: Binning) -> EstimatorResult:
    """Efron-Stein jackknife: N*H_full - ((N-1)/N) * sum of leave-one-out estimates.

    Leave-one-out estimates are computed by decrementing counts, one pass
    per occupied bin, rather than rebuilding N histograms.  At very small N
    the estimator can overshoot the log of the alphabet size; that is a
    property of the formula, not clamped away here.
    """
    hist = build_histogram(samples, binning)
    n = hist.total
    if n < 2:
        raise InsufficientData("jackknife needs at least 2 samples")
    full = _entropy_from_counts(hist.counts, n)
    loo_sum = 0.0
    counts = hist.counts.astype(np.int64)
    for i in np.nonzero(counts)[0]:
        reduced = counts.copy()
        reduced[i] -= 1
        # all samples in bin i share the same leave-one-out histogram
        loo_sum += counts[i] * _entropy_from_counts(reduced, n - 1)
    value = n * full - (n - 1) / n * loo_sum
    return EstimatorResult(
        value=value,
        method="Jackknife",
        n=n,
        bins=hist.bins,
        occupied_bins=hist.occupied,
        correction=value - full,
    )


def _empirical_joint(x: np.ndarray, y: np.ndarray, ax: int, ay: int) -> JointTable:
    counts = np.bincount(x * ay + y, minlength=ax * ay).reshape(ax, ay)
    return JointTable(counts / counts.sum())


def mi_plugin(x: SymbolSeries, y: SymbolSeries) -> EstimatorResult:
    """Mutual information of the empirical joint of two aligned series."""
    if len(x) != len(y):
        raise LengthMismatch(f"series lengths differ: {len(x)} vs {len(y)}")
    if len(x) == 0:
        raise EmptySample("series are empty")
    joint = _empirical_joint(x.symbols, y.symbols, x.alphabet_size, y.alphabet_size)
    return EstimatorResult(
        value=measures.mutual_information(joint),
        method="MLE",
        n=len(x),
        bins=x.alphabet_size * y.alphabet_size,
        occupied_bins=int((joint.mass > 0).sum()),
    )


def _history_codes(symbols: np.ndarray, order: int, alphabet: int, start: int) -> np.ndarray:
    """Base-``alphabet`` codes of the ``order`` most recent symbols at each
    position ``t >= start``, most recent symbol in the least significant digit."""
    n = symbols.shape[0]
    codes = np.zeros(n - start, dtype=np.int64)
    for lag in range(order):
        codes += symbols[start - lag : n - lag] * alphabet**lag
    return codes


def te_plugin(source: SymbolSeries, target: SymbolSeries, k: int, l: int) -> EstimatorResult:
    """Transfer entropy source -> target from empirical embedding counts.

    ``k`` is the target's own history length, ``l`` the source history
    length.  Builds the joint over (next target symbol, collapsed target
    history, collapsed source history) from all valid positions and
    evaluates the exact measure on it.
    """
    if k < 1 or l < 1:
        raise InvalidParameter(f"history lengths must be >= 1, got k={k}, l={l}")
    if len(source) != len(target):
        raise LengthMismatch(f"series lengths differ: {len(source)} vs {len(target)}")
    n = len(target)
    m = max(k, l)
    if n < m + 2:
        raise SeriesTooShort(f"need length > {m + 1}, got {n}")
    at, asrc = target.alphabet_size, source.alphabet_size
    cells = at ** (k + 1) * asrc**l
    if cells > TE_TABLE_CELL_GUARD:
        raise InvalidParameter(
            f"embedding table would hold {cells} cells (guard {TE_TABLE_CELL_GUARD})"
        )
    # histories end at t = m-1 .. n-2, predicting the symbol at t+1
    tgt_hist = _history_codes(target.symbols[:-1], k, at, m - 1)
    src_hist = _history_codes(source.symbols[:-1], l, asrc, m - 1)
    nxt = target.symbols[m:]
    flat = (nxt * at**k + tgt_hist) * asrc**l + src_hist
    counts = np.bincount(flat, minlength=cells).astype(float)
    joint = JointTable((counts / counts.sum()).reshape(at, at**k, asrc**l))
    return EstimatorResult(
        value=measures.transfer_entropy_exact(joint),
        method="MLE",
        n=int(nxt.shape[0]),
        bins=cells,
        occupied_bins=int((counts > 0).sum()),
    )
