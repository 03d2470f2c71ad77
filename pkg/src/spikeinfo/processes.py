"""Data-generating processes: Poisson event trains, order-k Markov chains,
and a lag-coupled binary pair used as ground truth for directed-information
estimators.

Times are seconds, rates are Hz throughout.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .distributions import JointTable
from .errors import (
    HistoryLengthMismatch,
    InsufficientSpikes,
    InvalidDistribution,
    InvalidParameter,
    NegativeRate,
)


@dataclass(frozen=True, eq=False)
class SpikeTrain:
    """Strictly increasing event timestamps inside the window [0, duration)."""

    timestamps: np.ndarray
    duration: float

    def __init__(self, timestamps, duration: float) -> None:
        ts = np.asarray(timestamps, dtype=float)
        if duration <= 0:
            raise InvalidParameter(f"duration must be positive, got {duration}")
        if ts.ndim != 1:
            raise InvalidParameter("timestamps must be a 1-d sequence")
        if ts.size and (ts[0] < 0 or ts[-1] >= duration or np.any(np.diff(ts) <= 0)):
            raise InvalidParameter("timestamps must be strictly increasing within [0, duration)")
        ts.flags.writeable = False
        object.__setattr__(self, "timestamps", ts)
        object.__setattr__(self, "duration", float(duration))

    @property
    def count(self) -> int:
        return self.timestamps.shape[0]


@dataclass(frozen=True, eq=False)
class SymbolSeries:
    """Integer-coded discrete series over the alphabet ``0 .. alphabet_size-1``.

    ``bin_width`` records the discretization step (seconds) when the series
    came from binning a spike train.
    """

    symbols: np.ndarray
    alphabet_size: int
    bin_width: float | None = None

    def __init__(self, symbols, alphabet_size: int, bin_width: float | None = None) -> None:
        sym = np.asarray(symbols, dtype=np.int64)
        if sym.ndim != 1:
            raise InvalidParameter("symbols must be a 1-d sequence")
        if alphabet_size < 1:
            raise InvalidParameter(f"alphabet_size must be >= 1, got {alphabet_size}")
        if sym.size and (sym.min() < 0 or sym.max() >= alphabet_size):
            raise InvalidParameter("symbols must lie in [0, alphabet_size)")
        sym.flags.writeable = False
        object.__setattr__(self, "symbols", sym)
        object.__setattr__(self, "alphabet_size", int(alphabet_size))
        object.__setattr__(self, "bin_width", bin_width)

    def __len__(self) -> int:
        return self.symbols.shape[0]


@dataclass(frozen=True, eq=False)
class MarkovModel:
    """Order-k chain: one next-symbol distribution per k-step history.

    ``transitions`` has shape ``(alphabet,)*k + (alphabet,)``; the last axis
    is the conditional law of the next symbol and every history row must
    sum to 1 within 1e-12.
    """

    order: int
    alphabet_size: int
    transitions: np.ndarray

    def __init__(self, order: int, alphabet_size: int, transitions) -> None:
        if order < 1:
            raise InvalidParameter(f"order must be >= 1, got {order}")
        trans = np.asarray(transitions, dtype=float)
        expected = (alphabet_size,) * (order + 1)
        if trans.shape != expected:
            raise InvalidParameter(f"transition tensor must have shape {expected}, got {trans.shape}")
        if np.any(trans < 0):
            raise InvalidDistribution("transition probabilities must be nonnegative")
        rows = trans.reshape(-1, alphabet_size)
        if np.any(np.abs(rows.sum(axis=1) - 1.0) > 1e-12):
            raise InvalidDistribution("each history row must sum to 1 within 1e-12")
        trans.flags.writeable = False
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "alphabet_size", int(alphabet_size))
        object.__setattr__(self, "transitions", trans)


@dataclass(frozen=True)
class PiecewiseRate:
    """Piecewise-constant intensity: ``values[i]`` Hz on ``[edges[i], edges[i+1])``."""

    edges: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.edges) != len(self.values) + 1:
            raise InvalidParameter("need len(edges) == len(values) + 1")
        if any(b <= a for a, b in zip(self.edges, self.edges[1:])):
            raise InvalidParameter("edges must be strictly increasing")
        if any(v < 0 for v in self.values):
            raise NegativeRate("rate values must be nonnegative")

    def at(self, t: float) -> float:
        if t < self.edges[0] or t >= self.edges[-1]:
            return 0.0
        return self.values[bisect_right(self.edges, t) - 1]

    @property
    def peak(self) -> float:
        return max(self.values)


def _homogeneous_arrival_times(rate, duration, rng: np.random.Generator):
    """Exponential interarrivals by inversion, in blocks until past ``duration``."""
    times = []
    t = 0.0
    block = max(16, int(rate * duration * 1.5) + 16)
    while True:
        gaps = -np.log1p(-rng.random(block)) / rate
        for g in gaps:
            t += g
            if t >= duration:
                return np.array(times)
            times.append(t)


def simulate_poisson(
    rate: float | PiecewiseRate,
    duration: float,
    rng: np.random.Generator,
) -> SpikeTrain:
    """Simulate a (in)homogeneous Poisson process on [0, duration).

    Constant rates use exponential interarrivals; piecewise-constant rates
    are thinned against their peak value, so the accepted events follow the
    target intensity exactly.
    """
    if duration <= 0:
        raise InvalidParameter(f"duration must be positive, got {duration}")
    if isinstance(rate, PiecewiseRate):
        lam_max = rate.peak
        if lam_max == 0.0:
            return SpikeTrain(np.empty(0), duration)
        candidates = _homogeneous_arrival_times(lam_max, duration, rng)
        keep = np.array([rng.random() < rate.at(t) / lam_max for t in candidates], dtype=bool)
        return SpikeTrain(candidates[keep], duration)
    if rate < 0:
        raise NegativeRate(f"rate must be nonnegative, got {rate}")
    if rate == 0.0:
        return SpikeTrain(np.empty(0), duration)
    return SpikeTrain(_homogeneous_arrival_times(rate, duration, rng), duration)


def simulate_markov(
    model: MarkovModel,
    steps: int,
    initial_history,
    rng: np.random.Generator,
) -> SymbolSeries:
    """Generate ``steps`` symbols after the seed history.

    The returned series starts with the ``k`` seed symbols so recurrences
    can be checked from index ``k`` on.
    """
    if steps < 1:
        raise InvalidParameter(f"steps must be >= 1, got {steps}")
    history = np.asarray(initial_history, dtype=np.int64)
    if history.shape != (model.order,):
        raise HistoryLengthMismatch(
            f"initial history must have length {model.order}, got {history.shape}"
        )
    if history.size and (history.min() < 0 or history.max() >= model.alphabet_size):
        raise InvalidParameter("history symbols outside the alphabet")

    a = model.alphabet_size
    # Row lookup by base-a history code; cumulative rows turn one uniform
    # into one symbol via bisect.
    rows = np.cumsum(model.transitions.reshape(-1, a), axis=1)
    rows_list = rows.tolist()
    powers = [a**i for i in range(model.order - 1, -1, -1)]
    code = int(sum(int(s) * p for s, p in zip(history, powers)))

    out = np.empty(model.order + steps, dtype=np.int64)
    out[: model.order] = history
    u = rng.random(steps)
    top = powers[0]
    for i in range(steps):
        row = rows_list[code]
        sym = bisect_right(row, u[i])
        if sym >= a:  # cumulative row may top out just below 1.0
            sym = a - 1
        out[model.order + i] = sym
        code = (code % top) * a + sym if model.order > 1 else sym
    return SymbolSeries(out, a)


def interarrivals(train: SpikeTrain) -> np.ndarray:
    """First differences of the spike timestamps."""
    if train.count < 2:
        raise InsufficientSpikes("need at least 2 spikes to form interarrivals")
    return np.diff(train.timestamps)


def coupled_binary_pair(
    coupling: float,
    lag: int,
    length: int,
    rng: np.random.Generator,
) -> tuple[SymbolSeries, SymbolSeries]:
    """Driver/follower pair: Y copies X ``lag`` steps back with probability
    ``coupling``, otherwise flips its own fair coin.

    X is iid uniform binary; the first ``lag`` symbols of Y are iid uniform.
    With coupling 1 and lag 1 the exact transfer entropy X->Y at unit
    histories is 1 bit and 0 in the reverse direction (see
    :func:`coupled_pair_joint`).
    """
    if not 0.0 <= coupling <= 1.0:
        raise InvalidParameter(f"coupling must be in [0, 1], got {coupling}")
    if lag < 1:
        raise InvalidParameter(f"lag must be >= 1, got {lag}")
    if length <= lag:
        raise InvalidParameter(f"length must exceed lag, got {length} <= {lag}")
    x = (rng.random(length) < 0.5).astype(np.int64)
    y = np.empty(length, dtype=np.int64)
    y[:lag] = (rng.random(lag) < 0.5).astype(np.int64)
    copy = rng.random(length - lag) < coupling
    noise = (rng.random(length - lag) < 0.5).astype(np.int64)
    y[lag:] = np.where(copy, x[:-lag], noise)
    return SymbolSeries(x, 2), SymbolSeries(y, 2)


def coupled_pair_joint(coupling: float) -> JointTable:
    """Exact stationary joint P(y_next, y_prev, x_prev) for lag-1 coupling.

    Axis order matches what :func:`spikeinfo.measures.transfer_entropy_exact`
    expects for the X->Y direction: (next state, target history, source
    history).
    """
    if not 0.0 <= coupling <= 1.0:
        raise InvalidParameter(f"coupling must be in [0, 1], got {coupling}")
    table = np.empty((2, 2, 2))
    for y_next in (0, 1):
        for y_prev in (0, 1):
            for x_prev in (0, 1):
                emit = coupling * (1.0 if y_next == x_prev else 0.0) + (1.0 - coupling) / 2.0
                table[y_next, y_prev, x_prev] = 0.25 * emit
    return JointTable(table)
