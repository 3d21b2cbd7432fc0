import numpy as np
import pytest

from gvmpy.estimators import (EmpiricalCovariance, SpectralEstimate, TimeSeries, bartlett,
                              empirical_covariance, frequency_grid, periodogram,
                              psd_from_covariance, sample_covariance, segment_bounds,
                              welch, window_weights)
from gvmpy.exceptions import InsufficientDataError
from gvmpy.gp import sample_even_gp
from gvmpy.kernels import ExpCos, KernelModel, eval_kernel, eval_psd


def cosine_series(n=4000, span=1000.0, frequency=0.05):
    times = np.linspace(0.0, span, n)
    return TimeSeries(times, np.cos(2.0 * np.pi * frequency * times))


def white_noise(seed, n=4000, step=0.25):
    rng = np.random.default_rng(seed)
    return TimeSeries(np.arange(n) * step, rng.standard_normal(n))


@pytest.mark.parametrize(
    "times, values",
    [([0.0, 1.0, 1.0], [1.0, 2.0, 3.0]),
     ([0.0, 2.0, 1.0], [1.0, 2.0, 3.0]),
     ([0.0, 1.0], [1.0, 2.0, 3.0]),
     ([0.0, np.nan], [1.0, 2.0]),
     ([0.0, 1.0], [1.0, np.inf])]
)
def test_time_series_should_throw_value_error(times, values):
    with pytest.raises(ValueError):
        TimeSeries(times, values)


def test_time_series_needs_two_points():
    with pytest.raises(InsufficientDataError):
        TimeSeries([0.0], [1.0])


def test_time_series_properties():
    ts = TimeSeries(np.arange(11) * 0.5, np.arange(11.0))

    assert ts.n == 11
    assert ts.span == 5.0
    assert ts.nyquist == 1.0
    assert ts.is_evenly_sampled
    assert np.mean(ts.centered().values) == pytest.approx(0.0)


def test_spectral_estimate_should_throw_value_error():
    with pytest.raises(ValueError):
        SpectralEstimate([0.0, 0.1, 0.3], [1.0, 1.0, 1.0])

    with pytest.raises(ValueError):
        SpectralEstimate([0.0, 0.1, 0.2], [1.0, -1.0, 1.0])


def test_empirical_covariance_hand_computed():
    ts = TimeSeries([0.0, 1.0, 2.0], [1.0, -1.0, 1.0])
    cov = empirical_covariance(ts, bin_width=0.5, center=False)

    assert np.allclose(cov.lag_centers, [0.0, 1.0, 2.0])
    assert np.allclose(cov.estimates, [1.0, -1.0, 1.0])
    assert np.array_equal(cov.counts, [3, 2, 1])


def test_empirical_covariance_without_centering():
    cov = empirical_covariance(TimeSeries([0.0, 1.0], [1.0, 1.0]), center=False)

    assert np.allclose(cov.estimates, [1.0, 1.0])


def test_empirical_covariance_of_constant_series():
    cov = empirical_covariance(TimeSeries(np.arange(20.0), np.full(20, 3.0)))

    assert np.allclose(cov.estimates, 0.0)


def test_empirical_covariance_needs_two_bins():
    with pytest.raises(InsufficientDataError):
        empirical_covariance(TimeSeries([0.0, 1.0, 2.0], [1.0, 2.0, 0.0]), max_lag=0.4)


@pytest.mark.parametrize("bin_width, max_lag", [(0.0, None), (-1.0, None), (1.0, 50.0),
                                                (1.0, -2.0)])
def test_empirical_covariance_should_throw_value_error(bin_width, max_lag):
    with pytest.raises(ValueError):
        empirical_covariance(TimeSeries(np.arange(10.0), np.arange(10.0)), bin_width, max_lag)


def test_empirical_covariance_matches_sample_covariance_on_even_data():
    ts = white_noise(3, n=300, step=1.0)
    cov = empirical_covariance(ts, bin_width=1.0, max_lag=40.0)

    assert np.allclose(cov.estimates, sample_covariance(ts.values, 40))


def test_empirical_covariance_error_shrinks_with_more_data():
    model = KernelModel(ExpCos(), [100.0, 0.05, 0.015])
    truth = eval_kernel(model, np.arange(51.0))

    errors = []
    for n in (500, 2000, 8000):
        absolute = []
        for seed in range(20):
            ts = sample_even_gp(model, n, n - 1.0, seed)
            cov = empirical_covariance(ts, bin_width=1.0, max_lag=50.0)
            absolute.append(np.mean(np.abs(cov.estimates - truth)))
        errors.append(np.mean(absolute))

    assert errors[0] > errors[1] > errors[2]


def test_empirical_covariance_drops_empty_bins():
    ts = TimeSeries([0.0, 1.0, 5.0], [1.0, 2.0, 3.0])
    cov = empirical_covariance(ts, bin_width=1.0)

    assert np.allclose(cov.lag_centers, [0.0, 1.0, 4.0, 5.0])
    assert np.all(cov.counts > 0)


def test_periodogram_peak_of_pure_cosine():
    freqs = np.linspace(0.01, 0.1, 91)
    estimate = periodogram(cosine_series(), freqs)

    assert freqs[np.argmax(estimate.psd)] == pytest.approx(0.05)
    assert estimate.onesided
    assert estimate.diagnostics["segments"] == 1


def test_periodogram_peak_on_uneven_samples():
    rng = np.random.default_rng(1)
    times = np.sort(rng.uniform(0.0, 1000.0, 2000))
    ts = TimeSeries(times, np.cos(2.0 * np.pi * 0.05 * times))
    freqs = np.linspace(0.01, 0.2, 191)

    assert freqs[np.argmax(periodogram(ts, freqs).psd)] == pytest.approx(0.05, abs=0.0011)


def test_periodogram_of_zero_signal():
    estimate = periodogram(TimeSeries(np.arange(100.0), np.zeros(100)))

    assert np.all(estimate.psd == 0.0)
    assert estimate.total_mass == 0.0
    assert estimate.diagnostics["zero_mass"]


def test_periodogram_flags_grid_beyond_nyquist():
    ts = white_noise(0, n=200, step=1.0)
    estimate = periodogram(ts, np.linspace(0.01, 0.9, 50))

    assert estimate.diagnostics["nyquist_warning"]


def test_periodogram_total_mass_of_white_noise():
    masses = [periodogram(white_noise(seed)).total_mass for seed in range(20)]

    assert np.mean(masses) == pytest.approx(1.0, rel=0.2)


def test_periodogram_mass_under_densification():
    coarse = np.mean([periodogram(white_noise(seed, n=2000, step=0.5)).total_mass
                      for seed in range(10)])
    dense = np.mean([periodogram(white_noise(seed, n=4000, step=0.25)).total_mass
                     for seed in range(10)])

    assert abs(dense - coarse) / coarse < 0.1


def test_windows_preserve_peak_location():
    freqs = np.linspace(0.01, 0.1, 91)
    ts = cosine_series()
    peaks = [freqs[np.argmax(periodogram(ts, freqs, window).psd)]
             for window in (None, "hann", "hamming")]

    assert max(peaks) - min(peaks) <= 0.001 + 1e-12


@pytest.mark.parametrize("window, scaling", [("box", "density"), (None, "power")])
def test_periodogram_should_throw_value_error(window, scaling):
    with pytest.raises(ValueError):
        periodogram(white_noise(0, n=100), window=window, scaling=scaling)


def test_bartlett_with_one_segment_is_periodogram():
    ts = white_noise(5, n=512, step=1.0)
    freqs = frequency_grid(ts, 100)

    assert np.allclose(bartlett(ts, freqs, segments=1).psd, periodogram(ts, freqs).psd)


def test_welch_without_overlap_and_window_is_bartlett():
    ts = white_noise(6, n=512, step=1.0)
    freqs = frequency_grid(ts, 100)

    assert np.allclose(welch(ts, freqs, segments=4, overlap=0.0, window=None).psd,
                       bartlett(ts, freqs, segments=4).psd)


@pytest.mark.parametrize("estimator", [bartlett, welch])
def test_segmented_estimators_keep_the_peak(estimator):
    freqs = np.linspace(0.01, 0.1, 91)
    estimate = estimator(cosine_series(), freqs, segments=4)

    assert freqs[np.argmax(estimate.psd)] == pytest.approx(0.05, abs=0.0011)
    assert estimate.diagnostics["segments"] == 4


def test_bartlett_reduces_variance():
    ts = white_noise(7, n=2048, step=1.0)
    freqs = frequency_grid(ts, 200)

    assert np.var(bartlett(ts, freqs, segments=4).psd) < np.var(bartlett(ts, freqs, segments=1).psd)


def test_segments_need_enough_points():
    with pytest.raises(InsufficientDataError):
        bartlett(white_noise(0, n=40), segments=4)


def test_segment_bounds():
    assert segment_bounds(100, 4) == [(0, 25), (25, 50), (50, 75), (75, 100)]
    assert segment_bounds(100, 1) == [(0, 100)]

    bounds = segment_bounds(100, 3, 0.5)
    assert bounds[0][0] == 0 and bounds[-1][1] == 100
    assert bounds[1][0] < bounds[0][1]


def test_window_weights_are_energy_normalised():
    rng = np.random.default_rng(2)
    times = np.sort(rng.uniform(0.0, 10.0, 300))

    for window in (None, "hann", "hamming"):
        assert np.sum(window_weights(times, window) ** 2) == pytest.approx(300.0)


def test_psd_from_single_bin_is_flat():
    cov = EmpiricalCovariance([0.0], [2.0], [10], bin_width=0.5)
    estimate = psd_from_covariance(cov, np.linspace(0.0, 1.0, 11))

    assert np.allclose(estimate.psd, 1.0)
    assert not estimate.onesided


def test_psd_from_exact_covariance_matches_model():
    model = KernelModel(ExpCos(), [1.0, 0.05, 0.01])
    lags = np.arange(2000) * 0.25
    cov = EmpiricalCovariance(lags, eval_kernel(model, lags), np.ones(2000, dtype=int), 0.25)
    freqs = np.linspace(0.0, 0.2, 201)

    estimate = psd_from_covariance(cov, freqs)
    expected = eval_psd(model, freqs, symmetric=True)

    assert estimate.psd[50] == pytest.approx(expected[50], rel=1e-2)
    assert estimate.diagnostics["clipped_mass"] >= 0.0


def test_psd_from_covariance_of_cosine_peaks_at_tone():
    ts = cosine_series(n=2000, span=500.0)
    freqs = np.linspace(0.01, 0.1, 91)
    cov = empirical_covariance(ts, max_lag=250.0)

    assert freqs[np.argmax(psd_from_covariance(cov, freqs).psd)] == pytest.approx(0.05, abs=0.0011)
