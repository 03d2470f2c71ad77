"""Direct-method spike-train discretization and closed-form maximum-entropy
benchmarks for time and rate codes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidParameter,
    InvalidRate,
    MultiSpikeBin,
    NonpositiveBinWidth,
    NonpositiveMean,
    SeriesTooShort,
    ZeroSpikes,
)
from .measures import Bits
from .processes import SpikeTrain, SymbolSeries


@dataclass(frozen=True, eq=False)
class WordSeries:
    """Binary words read off a discretized train with a sliding window."""

    words: np.ndarray
    word_length: int
    stride: int
    bin_width: float | None = None

    def __len__(self) -> int:
        return self.words.shape[0]

    @property
    def alphabet_size(self) -> int:
        return 2**self.word_length

    def as_symbols(self) -> SymbolSeries:
        return SymbolSeries(self.words, self.alphabet_size, bin_width=self.bin_width)


def bin_spikes(train: SpikeTrain, bin_width: float) -> SymbolSeries:
    """Discretize a train into 0/1 bins of ``bin_width`` seconds.

    Bin i covers [i*bin_width, (i+1)*bin_width).  The width must be small
    enough that no bin holds two spikes.
    """
    if bin_width <= 0:
        raise NonpositiveBinWidth(f"bin width must be positive, got {bin_width}")
    n_bins = int(math.ceil(train.duration / bin_width))
    symbols = np.zeros(n_bins, dtype=np.int64)
    if train.count:
        idx = np.floor(train.timestamps / bin_width).astype(np.int64)
        uniq, counts = np.unique(idx, return_counts=True)
        if counts.max() > 1:
            raise MultiSpikeBin(
                f"bin width {bin_width} puts {counts.max()} spikes into one bin"
            )
        symbols[uniq] = 1
    return SymbolSeries(symbols, 2, bin_width=bin_width)


def words(series: SymbolSeries, word_length: int, stride: int = 1) -> WordSeries:
    """Sliding binary words over a 0/1 series.

    The first (earliest) bin of each window is the least significant bit,
    so [1, 0, 1] at length 2 encodes to [1, 2].
    """
    if series.alphabet_size != 2:
        raise InvalidParameter("words are defined for binary series")
    if word_length < 1:
        raise InvalidParameter(f"word length must be >= 1, got {word_length}")
    if stride < 1:
        raise InvalidParameter(f"stride must be >= 1, got {stride}")
    n = len(series)
    if n < word_length:
        raise SeriesTooShort(f"series of length {n} is shorter than words of {word_length}")
    starts = np.arange(0, n - word_length + 1, stride)
    codes = np.zeros(starts.shape[0], dtype=np.int64)
    for offset in range(word_length):
        codes += series.symbols[starts + offset] << offset
    return WordSeries(
        words=codes, word_length=word_length, stride=stride, bin_width=series.bin_width
    )


def time_code_max_entropy(n_bins: int, spikes: int, mode: str = "exact") -> Bits:
    """Max entropy of equiprobable binary strings: log2 of (n_bins choose spikes).

    ``exact`` evaluates the log-binomial via log-gamma; ``stirling`` uses
    the large-N form n_bins * H2(spikes / n_bins).
    """
    if n_bins < 0 or spikes < 0 or spikes > n_bins:
        raise InvalidRate(f"need 0 <= spikes <= n_bins, got {spikes} of {n_bins}")
    if mode == "exact":
        return (
            math.lgamma(n_bins + 1) - math.lgamma(spikes + 1) - math.lgamma(n_bins - spikes + 1)
        ) / math.log(2.0)
    if mode == "stirling":
        if spikes == 0 or spikes == n_bins:
            return 0.0
        f = spikes / n_bins
        return -n_bins * (f * math.log2(f) + (1.0 - f) * math.log2(1.0 - f))
    raise InvalidParameter(f"mode must be 'exact' or 'stirling', got {mode!r}")


def _poisson_pmf(k: int, lam: float) -> float:
    return math.exp(k * math.log(lam) - lam - math.lgamma(k + 1))


POISSON_TAIL = 1e-12


def rate_code_entropy_poisson(mean_count: float, mode: str = "exact") -> Bits:
    """Entropy of a Poisson spike count with the given mean.

    ``exact`` sums p log2 p outward from the mode until residual mass drops
    below 1e-12; ``stirling`` is the Gaussian-like asymptote
    half log2(2*pi*e*mean).
    """
    if mean_count <= 0:
        raise NonpositiveMean(f"mean count must be positive, got {mean_count}")
    if mode == "stirling":
        return 0.5 * math.log2(2.0 * math.pi * math.e * mean_count)
    if mode != "exact":
        raise InvalidParameter(f"mode must be 'exact' or 'stirling', got {mode!r}")
    mode_k = int(mean_count)
    total = 0.0
    acc = 0.0
    lo, hi = mode_k, mode_k
    p = _poisson_pmf(mode_k, mean_count)
    total += p
    acc -= p * math.log2(p) if p > 0 else 0.0
    while total < 1.0 - POISSON_TAIL:
        nxt_lo = lo - 1
        nxt_hi = hi + 1
        p_lo = _poisson_pmf(nxt_lo, mean_count) if nxt_lo >= 0 else 0.0
        p_hi = _poisson_pmf(nxt_hi, mean_count)
        if p_lo >= p_hi and nxt_lo >= 0:
            lo = nxt_lo
            p = p_lo
        else:
            hi = nxt_hi
            p = p_hi
        total += p
        if p > 0:
            acc -= p * math.log2(p)
    return acc


def rate_code_entropy_exponential(mean_count: float) -> Bits:
    """Max-entropy count law for fixed positive mean: log2(1+m) + m log2(1+1/m)."""
    if mean_count <= 0:
        raise NonpositiveMean(f"mean count must be positive, got {mean_count}")
    return math.log2(1.0 + mean_count) + mean_count * math.log2(1.0 + 1.0 / mean_count)


def entropy_per_spike(total: Bits, spike_count: int) -> Bits:
    """Spread a train-level entropy over its spikes."""
    if spike_count < 1:
        raise ZeroSpikes(f"spike count must be >= 1, got {spike_count}")
    return total / spike_count
