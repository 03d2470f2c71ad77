"""Shared Monte Carlo studies, cached so module tests and the acceptance
suite pay for each of them once per session."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from spikeinfo import (
    DiscreteBinning,
    build_histogram,
    coupled_binary_pair,
    entropy_jackknife,
    entropy_miller_madow,
    entropy_mle,
    permutation_test,
    te_plugin,
)

UNIFORM_ALPHABET = 256
BIAS_SEEDS = 100
BIAS_SAMPLE_SIZES = (100, 1_000, 10_000)


@lru_cache(maxsize=None)
def entropy_bias_study() -> dict[int, dict[str, float]]:
    """Mean entropy estimates for a uniform 256-symbol source (true H = 8 bits).

    Returns {N: {"mle": mean, "mm": mean, "jk": mean}} over ``BIAS_SEEDS``
    independent draws per sample size.
    """
    binning = DiscreteBinning(UNIFORM_ALPHABET)
    out: dict[int, dict[str, float]] = {}
    for n in BIAS_SAMPLE_SIZES:
        sums = {"mle": 0.0, "mm": 0.0, "jk": 0.0}
        for seed in range(BIAS_SEEDS):
            rng = np.random.default_rng(10_000 + seed)
            samples = rng.integers(0, UNIFORM_ALPHABET, size=n)
            hist = build_histogram(samples, binning)
            sums["mle"] += entropy_mle(hist).value
            sums["mm"] += entropy_miller_madow(hist).value
            sums["jk"] += entropy_jackknife(samples, binning).value
        out[n] = {k: v / BIAS_SEEDS for k, v in sums.items()}
    return out


NULL_RUNS = 200
NULL_SURROGATES = 19
NULL_SERIES_LENGTH = 1_000


@lru_cache(maxsize=None)
def null_p_values() -> tuple[float, ...]:
    """p-values of the TE permutation test on independent pairs, one per run."""
    stat = lambda s, t: te_plugin(s, t, 1, 1).value  # noqa: E731
    ps = []
    for run in range(NULL_RUNS):
        rng = np.random.default_rng(50_000 + run)
        x, y = coupled_binary_pair(0.0, 1, NULL_SERIES_LENGTH, rng)
        report = permutation_test(
            stat, x, y, n_surrogates=NULL_SURROGATES, seed=90_000 + 1_000 * run
        )
        ps.append(report.p_value)
    return tuple(ps)
