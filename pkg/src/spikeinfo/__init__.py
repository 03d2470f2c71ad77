"""spikeinfo: information-theoretic measures, bias-corrected estimators,
and spike-train analysis for discrete data.

Exact quantities (entropy, mutual information, transfer entropy, KL
divergence, channel capacity) live in :mod:`spikeinfo.measures` and operate
on the finite models from :mod:`spikeinfo.distributions`.  Histogram
estimators with Miller-Madow and jackknife corrections are in
:mod:`spikeinfo.estimators`, spike-train machinery in
:mod:`spikeinfo.spiketrains`, simulators in :mod:`spikeinfo.processes`,
and surrogate significance testing in :mod:`spikeinfo.significance`.
"""

__version__ = "0.1.0"

from .distributions import (
    Bernoulli,
    Binomial,
    Exponential,
    FiniteDistribution,
    JointTable,
    Normal,
    Poisson,
    SampleStats,
    cdf,
    conditional,
    density,
    independence_defect,
    marginal,
    moments,
    sample,
    sample_stats,
)
from .estimators import (
    DiscreteBinning,
    EqualWidthBinning,
    EstimatorResult,
    Histogram,
    build_histogram,
    entropy_jackknife,
    entropy_miller_madow,
    entropy_mle,
    mi_plugin,
    te_plugin,
)
from .measures import (
    Bits,
    channel_capacity,
    conditional_entropy,
    conditional_mutual_information,
    cross_entropy,
    differential_entropy_closed_form,
    entropy,
    information_content,
    joint_entropy,
    kl_closed_form,
    kl_divergence,
    mi_as_kl,
    multi_information,
    mutual_information,
    normalized_mi,
    pmi,
    transfer_entropy_exact,
)
from .processes import (
    MarkovModel,
    PiecewiseRate,
    SpikeTrain,
    SymbolSeries,
    coupled_binary_pair,
    coupled_pair_joint,
    interarrivals,
    simulate_markov,
    simulate_poisson,
)
from .significance import (
    BlockShuffle,
    FullPermutation,
    TestReport,
    permutation_test,
    shuffle,
)
from .spiketrains import (
    WordSeries,
    bin_spikes,
    entropy_per_spike,
    rate_code_entropy_exponential,
    rate_code_entropy_poisson,
    time_code_max_entropy,
    words,
)

__all__ = [name for name in dir() if not name.startswith("_")]
