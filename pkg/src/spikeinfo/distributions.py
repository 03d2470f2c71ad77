"""Finite and parametric probability models, exact moments, sample statistics.

Finite models are immutable mass vectors / tensors over integer-coded
alphabets.  Parametric families cover the five textbook cases used for
spike-train modeling: Bernoulli, binomial, Poisson, exponential, normal.
All sampling routines draw nothing but uniforms from a caller-supplied
``numpy.random.Generator``, so results are reproducible from a 64-bit seed
alone and independent of numpy's own distribution implementations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import (
    AxisOutOfRange,
    DegenerateMean,
    InsufficientData,
    InvalidDistribution,
    InvalidParameter,
    ZeroConditioningEvent,
)

# Construction tolerances: deviations of the total mass from 1 below
# NORMALIZE_TOL are treated as float noise and silently renormalized,
# larger ones are rejected as user error.
NORMALIZE_TOL = 1e-9
SUM_TOL = 1e-12


def _clean_mass(values, name: str) -> np.ndarray:
    mass = np.asarray(values, dtype=float)
    if mass.size == 0:
        raise InvalidDistribution(f"{name} must have at least one cell")
    if np.any(mass < -1e-12) or not np.all(np.isfinite(mass)):
        raise InvalidDistribution(f"{name} entries must be finite and nonnegative")
    mass = np.where(mass < 0, 0.0, mass)
    # fsum is exactly rounded and order-independent, so reshaped or
    # transposed views of one table normalize to bit-identical cells
    total = math.fsum(mass.flat)
    if abs(total - 1.0) > NORMALIZE_TOL:
        raise InvalidDistribution(
            f"{name} must sum to 1 (got {total!r}, tolerance {NORMALIZE_TOL})"
        )
    if abs(total - 1.0) > 1e-15:  # below that, dividing again would only churn ulps
        mass = mass / total
    mass.flags.writeable = False
    return mass


@dataclass(frozen=True, eq=False)
class FiniteDistribution:
    """Probability mass over the integer alphabet ``0 .. alphabet_size-1``."""

    mass: np.ndarray

    def __init__(self, mass) -> None:
        cleaned = _clean_mass(mass, "FiniteDistribution mass")
        if cleaned.ndim != 1:
            raise InvalidDistribution("FiniteDistribution mass must be 1-d")
        object.__setattr__(self, "mass", cleaned)

    @property
    def alphabet_size(self) -> int:
        return self.mass.shape[0]

    @staticmethod
    def uniform(n: int) -> "FiniteDistribution":
        return FiniteDistribution(np.full(n, 1.0 / n))


@dataclass(frozen=True, eq=False)
class JointTable:
    """Dense probability tensor over a product of integer alphabets."""

    mass: np.ndarray

    def __init__(self, mass) -> None:
        cleaned = _clean_mass(mass, "JointTable mass")
        if cleaned.ndim < 1:
            raise InvalidDistribution("JointTable mass must have rank >= 1")
        object.__setattr__(self, "mass", cleaned)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.mass.shape

    @property
    def rank(self) -> int:
        return self.mass.ndim


@dataclass(frozen=True)
class Bernoulli:
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise InvalidParameter(f"Bernoulli p must be in [0, 1], got {self.p}")


@dataclass(frozen=True)
class Binomial:
    n: int
    p: float

    def __post_init__(self):
        if self.n < 1 or int(self.n) != self.n:
            raise InvalidParameter(f"Binomial n must be a positive integer, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidParameter(f"Binomial p must be in [0, 1], got {self.p}")


@dataclass(frozen=True)
class Poisson:
    lam: float

    def __post_init__(self):
        if not self.lam > 0:
            raise InvalidParameter(f"Poisson rate must be positive, got {self.lam}")


@dataclass(frozen=True)
class Exponential:
    lam: float

    def __post_init__(self):
        if not self.lam > 0:
            raise InvalidParameter(f"Exponential rate must be positive, got {self.lam}")


@dataclass(frozen=True)
class Normal:
    mu: float
    var: float

    def __post_init__(self):
        if not self.var > 0:
            raise InvalidParameter(f"Normal variance must be positive, got {self.var}")


ParametricModel = Union[Bernoulli, Binomial, Poisson, Exponential, Normal]
DISCRETE_FAMILIES = (Bernoulli, Binomial, Poisson)


@dataclass(frozen=True)
class SampleStats:
    """Sample mean/variance plus the mean-variance ratio statistics.

    ``snr`` is flagged ``inf`` for constant data.  When the samples are
    event counts over windows of duration ``window`` seconds, the index of
    dispersion is the Fano factor of the counting process.
    """

    mean: float
    variance: float
    snr: float
    cv: float
    index_of_dispersion: float
    n: int
    window: float | None = None


def density(model: ParametricModel, x: float) -> float:
    """pmf (discrete families) or pdf (continuous) at ``x``; 0 off support."""
    if isinstance(model, Bernoulli):
        if x == 0:
            return 1.0 - model.p
        if x == 1:
            return model.p
        return 0.0
    if isinstance(model, Binomial):
        k = x
        if k != int(k) or k < 0 or k > model.n:
            return 0.0
        k = int(k)
        if model.p == 0.0:
            return 1.0 if k == 0 else 0.0
        if model.p == 1.0:
            return 1.0 if k == model.n else 0.0
        logpmf = (
            math.lgamma(model.n + 1)
            - math.lgamma(k + 1)
            - math.lgamma(model.n - k + 1)
            + k * math.log(model.p)
            + (model.n - k) * math.log1p(-model.p)
        )
        return math.exp(logpmf)
    if isinstance(model, Poisson):
        k = x
        if k != int(k) or k < 0:
            return 0.0
        k = int(k)
        return math.exp(k * math.log(model.lam) - model.lam - math.lgamma(k + 1))
    if isinstance(model, Exponential):
        # pdf vanishes for x <= 0, matching the open-support convention
        if x <= 0:
            return 0.0
        return model.lam * math.exp(-model.lam * x)
    if isinstance(model, Normal):
        z = (x - model.mu) ** 2 / model.var
        return math.exp(-0.5 * z) / math.sqrt(2.0 * math.pi * model.var)
    raise InvalidParameter(f"unknown model {model!r}")


def cdf(model: ParametricModel, x: float) -> float:
    """P(X <= x)."""
    if isinstance(model, Bernoulli):
        if x < 0:
            return 0.0
        if x < 1:
            return 1.0 - model.p
        return 1.0
    if isinstance(model, Binomial):
        if x < 0:
            return 0.0
        k = min(int(math.floor(x)), model.n)
        return float(sum(density(model, i) for i in range(k + 1)))
    if isinstance(model, Poisson):
        if x < 0:
            return 0.0
        k = int(math.floor(x))
        total = 0.0
        for i in range(k + 1):
            term = density(model, i)
            total += term
            # past the mode the pmf decays geometrically; stop once the
            # remaining mass cannot move the result
            if i > model.lam and term < 1e-18:
                break
        return min(1.0, total)
    if isinstance(model, Exponential):
        if x <= 0:
            return 0.0
        return -math.expm1(-model.lam * x)
    if isinstance(model, Normal):
        z = (x - model.mu) / math.sqrt(2.0 * model.var)
        return 0.5 * (1.0 + math.erf(z))
    raise InvalidParameter(f"unknown model {model!r}")


def _sample_finite(mass: np.ndarray, count: int, rng: np.random.Generator) -> np.ndarray:
    table = np.cumsum(mass)
    u = rng.random(count)
    idx = np.searchsorted(table, u, side="right")
    return np.minimum(idx, mass.shape[0] - 1).astype(np.int64)


def _sample_poisson_knuth(lam: float, count: int, rng: np.random.Generator) -> np.ndarray:
    # Knuth multiplication: multiply uniforms until the product drops
    # below e^-lam; vectorized over the still-active draws.
    limit = math.exp(-lam)
    prod = rng.random(count)
    k = np.zeros(count, dtype=np.int64)
    active = prod >= limit
    while active.any():
        k[active] += 1
        prod[active] *= rng.random(int(active.sum()))
        active = prod >= limit
    return k


def _sample_normal_box_muller(mu, var, count, rng: np.random.Generator) -> np.ndarray:
    pairs = (count + 1) // 2
    u1 = 1.0 - rng.random(pairs)  # (0, 1]: keeps the log finite
    u2 = rng.random(pairs)
    radius = np.sqrt(-2.0 * np.log(u1))
    z = np.concatenate([radius * np.cos(2 * np.pi * u2), radius * np.sin(2 * np.pi * u2)])
    return mu + math.sqrt(var) * z[:count]


def sample(
    model: ParametricModel | FiniteDistribution,
    count: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Draw ``count`` iid realizations, deterministically for a given generator state.

    Inversion is used for Bernoulli/exponential/finite alphabets, Knuth
    multiplication for Poisson, Box-Muller for normal; binomial draws sum
    Bernoullis for n <= 64 and fall back to cdf-table inversion above that.
    """
    if count < 1:
        raise InvalidParameter(f"count must be >= 1, got {count}")
    if isinstance(model, FiniteDistribution):
        return _sample_finite(model.mass, count, rng)
    if isinstance(model, Bernoulli):
        return (rng.random(count) < model.p).astype(np.int64)
    if isinstance(model, Binomial):
        if model.n <= 64:
            u = rng.random((count, model.n))
            return (u < model.p).sum(axis=1).astype(np.int64)
        pmf = np.array([density(model, k) for k in range(model.n + 1)])
        return _sample_finite(pmf / pmf.sum(), count, rng)
    if isinstance(model, Poisson):
        return _sample_poisson_knuth(model.lam, count, rng)
    if isinstance(model, Exponential):
        u = rng.random(count)
        return -np.log1p(-u) / model.lam
    if isinstance(model, Normal):
        return _sample_normal_box_muller(model.mu, model.var, count, rng)
    raise InvalidParameter(f"unknown model {model!r}")


def moments(
    model: ParametricModel | FiniteDistribution,
    values: Sequence[float] | None = None,
) -> tuple[float, float]:
    """Exact (mean, variance).

    For a ``FiniteDistribution`` the alphabet is integer-coded ``0..n-1``
    unless explicit outcome ``values`` are supplied (e.g. die faces 1..6).
    """
    if isinstance(model, FiniteDistribution):
        xs = np.arange(model.alphabet_size, dtype=float) if values is None else np.asarray(values, dtype=float)
        if xs.shape != model.mass.shape:
            raise InvalidParameter("values must match the alphabet size")
        mean = float(np.dot(xs, model.mass))
        var = float(np.dot((xs - mean) ** 2, model.mass))
        return mean, var
    if isinstance(model, Bernoulli):
        return model.p, model.p * (1.0 - model.p)
    if isinstance(model, Binomial):
        return model.n * model.p, model.n * model.p * (1.0 - model.p)
    if isinstance(model, Poisson):
        return model.lam, model.lam
    if isinstance(model, Exponential):
        return 1.0 / model.lam, 1.0 / model.lam**2
    if isinstance(model, Normal):
        return model.mu, model.var
    raise InvalidParameter(f"unknown model {model!r}")


def sample_stats(
    samples: Sequence[float],
    window: float | None = None,
    unbiased: bool = False,
) -> SampleStats:
    """Mean, population variance and the derived ratio statistics.

    Uses the population (1/n) variance convention by default; pass
    ``unbiased=True`` for the 1/(n-1) variant.  Constant data yields an
    infinite SNR; a zero mean makes the ratio statistics undefined and
    raises :class:`DegenerateMean`.
    """
    x = np.asarray(samples, dtype=float)
    if x.ndim != 1 or x.size < 2:
        raise InsufficientData("need at least 2 samples")
    n = x.size
    mean = float(x.mean())
    var = float(((x - mean) ** 2).sum() / (n - 1 if unbiased else n))
    if mean == 0.0:
        raise DegenerateMean("ratio statistics are undefined for zero sample mean")
    sd = math.sqrt(var)
    snr = math.inf if sd == 0.0 else mean / sd
    return SampleStats(
        mean=mean,
        variance=var,
        snr=snr,
        cv=sd / mean,
        index_of_dispersion=var / mean,
        n=n,
        window=window,
    )


def marginal(joint: JointTable, axis: int) -> FiniteDistribution:
    """Sum the tensor over all axes but ``axis``."""
    if not 0 <= axis < joint.rank:
        raise AxisOutOfRange(f"axis {axis} out of range for rank {joint.rank}")
    keep = tuple(i for i in range(joint.rank) if i != axis)
    return FiniteDistribution(joint.mass.sum(axis=keep) if keep else joint.mass)


def conditional(
    joint: JointTable, given_axis: int, given_value: int
) -> FiniteDistribution | JointTable:
    """Renormalized slice of the joint at ``given_axis == given_value``.

    Returns a :class:`FiniteDistribution` for rank-2 joints and a lower-rank
    :class:`JointTable` otherwise.
    """
    if not 0 <= given_axis < joint.rank:
        raise AxisOutOfRange(f"axis {given_axis} out of range for rank {joint.rank}")
    if not 0 <= given_value < joint.shape[given_axis]:
        raise AxisOutOfRange(f"value {given_value} outside axis of size {joint.shape[given_axis]}")
    sliced = np.take(joint.mass, given_value, axis=given_axis)
    total = sliced.sum()
    if total <= 0.0:
        raise ZeroConditioningEvent(
            f"conditioning value {given_value} on axis {given_axis} has zero probability"
        )
    sliced = sliced / total
    if sliced.ndim == 1:
        return FiniteDistribution(sliced)
    return JointTable(sliced)


def independence_defect(joint: JointTable) -> float:
    """Max-norm distance between a rank-2 joint and the product of its marginals."""
    if joint.rank != 2:
        raise AxisOutOfRange(f"independence defect needs a rank-2 joint, got rank {joint.rank}")
    px = joint.mass.sum(axis=1)
    py = joint.mass.sum(axis=0)
    return float(np.abs(joint.mass - np.outer(px, py)).max())
