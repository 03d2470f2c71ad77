import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import spikeinfo as si
from spikeinfo.errors import (
    InvalidRate,
    MultiSpikeBin,
    NonpositiveBinWidth,
    NonpositiveMean,
    SeriesTooShort,
    ZeroSpikes,
)


class TestBinSpikes:
    def test_direct_placement(self):
        train = si.SpikeTrain([0.001, 0.0041], duration=0.006)
        assert si.bin_spikes(train, 0.002).symbols.tolist() == [1, 0, 1]

    def test_empty_train(self):
        train = si.SpikeTrain([], duration=0.010)
        assert si.bin_spikes(train, 0.002).symbols.tolist() == [0, 0, 0, 0, 0]

    def test_two_spikes_in_one_bin_rejected(self):
        train = si.SpikeTrain([0.0010, 0.0015], duration=0.01)
        with pytest.raises(MultiSpikeBin):
            si.bin_spikes(train, 0.002)

    def test_nonpositive_width(self):
        with pytest.raises(NonpositiveBinWidth):
            si.bin_spikes(si.SpikeTrain([0.1], 1.0), 0.0)

    def test_symbol_sum_equals_spike_count(self):
        # gaps strictly above the bin width guarantee one spike per bin
        rng = np.random.default_rng(0)
        dt, duration = 0.002, 5.0
        for _ in range(20):
            gaps = dt * 1.01 + rng.exponential(0.05, size=200)
            times = np.cumsum(gaps)
            train = si.SpikeTrain(times[times < duration], duration)
            binned = si.bin_spikes(train, dt)
            assert binned.symbols.sum() == train.count
            assert len(binned) == math.ceil(duration / dt)


class TestWords:
    def test_encoding_convention(self):
        series = si.SymbolSeries([1, 0, 1], 2)
        assert si.words(series, 2).words.tolist() == [1, 2]

    def test_all_zero(self):
        series = si.SymbolSeries([0, 0, 0, 0], 2)
        assert si.words(series, 3).words.tolist() == [0, 0]

    def test_single_word(self):
        series = si.SymbolSeries([1, 1, 0], 2)
        assert si.words(series, 3).words.tolist() == [3]

    def test_stride(self):
        series = si.SymbolSeries([1, 0, 0, 1, 1, 0], 2)
        assert si.words(series, 2, stride=2).words.tolist() == [1, 2, 1]

    def test_too_short(self):
        with pytest.raises(SeriesTooShort):
            si.words(si.SymbolSeries([1], 2), 2)

    @given(
        st.lists(st.integers(min_value=0, max_value=1), min_size=4, max_size=64),
        st.integers(min_value=1, max_value=4),
        st.integers(min_value=1, max_value=3),
    )
    def test_words_stay_in_alphabet(self, bits, word_length, stride):
        ws = si.words(si.SymbolSeries(bits, 2), word_length, stride)
        assert len(ws) == (len(bits) - word_length) // stride + 1
        assert np.all(ws.words < 2**word_length)


class TestTimeCodeMaxEntropy:
    def test_exact_small_case(self):
        assert si.time_code_max_entropy(10, 3) == pytest.approx(math.log2(120), abs=1e-10)

    def test_degenerate_counts(self):
        assert si.time_code_max_entropy(10, 0) == pytest.approx(0.0, abs=1e-10)
        assert si.time_code_max_entropy(10, 10) == pytest.approx(0.0, abs=1e-10)

    def test_rate_above_bins_rejected(self):
        with pytest.raises(InvalidRate):
            si.time_code_max_entropy(5, 6)

    def test_stirling_agrees_at_scale(self):
        exact = si.time_code_max_entropy(10_000, 1_000, "exact")
        stirling = si.time_code_max_entropy(10_000, 1_000, "stirling")
        assert abs(exact - stirling) / exact < 0.01

    @given(st.integers(min_value=1, max_value=3000))
    def test_binomial_symmetry(self, n):
        r = n // 3
        a = si.time_code_max_entropy(n, r)
        b = si.time_code_max_entropy(n, n - r)
        assert a == pytest.approx(b, abs=1e-9)

    @given(st.integers(min_value=1, max_value=3000))
    def test_never_exceeds_one_bit_per_bin(self, n):
        for r in {0, n // 4, n // 2, n}:
            assert si.time_code_max_entropy(n, r) <= n + 1e-9


class TestRateCodeEntropy:
    def test_exact_poisson_reference(self):
        # frozen from a direct pmf-summation oracle
        assert si.rate_code_entropy_poisson(10.0) == pytest.approx(3.69533, abs=1e-4)

    def test_stirling_form(self):
        expected = 0.5 * math.log2(2 * math.pi * math.e * 10.0)
        assert si.rate_code_entropy_poisson(10.0, "stirling") == pytest.approx(expected, abs=1e-12)
        assert expected == pytest.approx(3.708, abs=1e-3)

    def test_stirling_agrees_at_scale(self):
        exact = si.rate_code_entropy_poisson(100.0)
        stirling = si.rate_code_entropy_poisson(100.0, "stirling")
        assert abs(exact - stirling) < 0.01

    def test_exact_matches_bruteforce_sum(self):
        for mean in (0.5, 3.0, 25.0):
            ks = np.arange(0, 300)
            logpmf = ks * math.log(mean) - mean - np.array([math.lgamma(k + 1) for k in ks])
            pmf = np.exp(logpmf)
            pmf = pmf[pmf > 0]
            brute = float(-(pmf * np.log2(pmf)).sum())
            assert si.rate_code_entropy_poisson(mean) == pytest.approx(brute, abs=1e-9)

    def test_exponential_at_one(self):
        assert si.rate_code_entropy_exponential(1.0) == 2.0

    def test_exponential_at_ten(self):
        expected = math.log2(11) + 10 * math.log2(1.1)
        assert si.rate_code_entropy_exponential(10.0) == pytest.approx(expected, abs=1e-12)
        assert expected == pytest.approx(4.834, abs=1e-3)

    def test_exponential_vanishes_at_zero_limit(self):
        assert si.rate_code_entropy_exponential(1e-9) < 1e-6

    def test_nonpositive_mean(self):
        with pytest.raises(NonpositiveMean):
            si.rate_code_entropy_poisson(0.0)
        with pytest.raises(NonpositiveMean):
            si.rate_code_entropy_exponential(-1.0)

    def test_exponential_dominates_exact_poisson(self):
        # the exponential count law is the max-entropy one at fixed mean;
        # the Stirling approximation overshoots at mean 1, so it is only
        # compared from mean 2 on
        for mean in (1, 2, 5, 10, 50):
            assert si.rate_code_entropy_exponential(mean) >= si.rate_code_entropy_poisson(mean)
        for mean in (2, 5, 10, 50):
            assert si.rate_code_entropy_exponential(mean) >= si.rate_code_entropy_poisson(
                mean, "stirling"
            )


class TestEntropyPerSpike:
    def test_divides_time_code_value(self):
        total = si.time_code_max_entropy(10, 3)
        assert si.entropy_per_spike(total, 3) == pytest.approx(2.302, abs=1e-3)

    def test_single_spike_unchanged(self):
        assert si.entropy_per_spike(4.2, 1) == 4.2

    def test_zero_spikes(self):
        with pytest.raises(ZeroSpikes):
            si.entropy_per_spike(1.0, 0)

    def test_decreasing_in_bin_width_at_fixed_rate(self):
        # fixed 20 Hz over 10 s; coarser bins leave fewer distinguishable
        # patterns per spike
        rate, duration = 20.0, 10.0
        spikes = int(rate * duration)
        values = []
        for dt in (0.001, 0.002, 0.005, 0.010, 0.020):
            n_bins = int(duration / dt)
            values.append(si.entropy_per_spike(si.time_code_max_entropy(n_bins, spikes), spikes))
        assert all(b < a for a, b in zip(values, values[1:]))


class TestRoundTrip:
    def test_word_entropy_approaches_bernoulli_limit(self):
        # length-1 words of a binned Poisson train estimate the Bernoulli
        # entropy of the true per-bin spike probability 1 - exp(-rate*dt)
        rate, duration, dt = 2.0, 100.0, 0.001
        train = si.simulate_poisson(rate, duration, np.random.default_rng(1))
        binned = si.bin_spikes(train, dt)
        ws = si.words(binned, 1)
        est = si.entropy_mle(
            si.build_histogram(ws.words, si.DiscreteBinning(2))
        ).value
        p = -math.expm1(-rate * dt)
        expected = -p * math.log2(p) - (1 - p) * math.log2(1 - p)
        assert abs(est - expected) < 0.02
        assert len(binned) == 100_000
