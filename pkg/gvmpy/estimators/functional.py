"""Covariance and PSD estimators for evenly and unevenly sampled series"""

import logging

import numpy as np

from ..exceptions import InsufficientDataError
from .series import EmpiricalCovariance, SpectralEstimate
from .utils import (SCALINGS, frequency_grid, validate_overlap_field,
                    validate_segments_field, validate_window_field, window_weights)

logger = logging.getLogger(__name__)

# Minimum number of observations in a Bartlett/Welch segment
MIN_SEGMENT_POINTS = 16

# Frequencies processed per block by the direct Fourier sums
_FREQ_BLOCK = 64


def empirical_covariance(ts, bin_width=None, max_lag=None, center=True):
    """
        Binned empirical covariance of a time series.

        Lag 0 only holds the n diagonal pairs, so it is the sample second
        moment; every other pair with lag l <= max_lag goes to the bin
        centred at k * bin_width with k = max(1, round(l / bin_width)).
        Empty bins are dropped. On evenly sampled data with bin_width equal
        to the sampling step this is the usual unbiased sample covariance.

        Supported Arguments
            ts: (TimeSeries) Observations
            bin_width=None: (Float) Lag bin width, defaults to the median time gap
            max_lag=None: (Float) Largest lag considered, defaults to the span
            center=True: (Boolean) Subtract the sample mean first
    """
    bin_width = ts.median_gap if bin_width is None else float(bin_width)
    max_lag = ts.span if max_lag is None else float(max_lag)

    if not bin_width > 0.0:
        raise ValueError("Please provide a valid bin_width")

    if not 0.0 < max_lag <= ts.span * (1.0 + 1e-12):
        raise ValueError("Please provide a valid max_lag, it can not exceed the span")

    times = ts.times
    values = ts.values - np.mean(ts.values) if center else np.asarray(ts.values)

    n_bins = int(np.rint(max_lag / bin_width)) + 1
    sums = np.zeros(n_bins)
    counts = np.zeros(n_bins, dtype=np.int64)

    sums[0] = np.dot(values, values)
    counts[0] = ts.n

    # Lags at offset k grow with k for every i, so the loop stops at the first
    # offset whose smallest lag is beyond max_lag
    for offset in range(1, ts.n):
        lags = times[offset:] - times[:-offset]

        if lags.min() > max_lag:
            break

        keep = lags <= max_lag
        index = np.maximum(1, np.rint(lags[keep] / bin_width).astype(np.int64))
        products = values[offset:][keep] * values[:-offset][keep]

        sums += np.bincount(index, weights=products, minlength=n_bins)[:n_bins]
        counts += np.bincount(index, minlength=n_bins)[:n_bins]

    occupied = counts > 0
    if np.count_nonzero(occupied) < 2:
        raise InsufficientDataError("Fewer than 2 non-empty lag bins, try a wider max_lag")

    return EmpiricalCovariance(
        lag_centers=np.flatnonzero(occupied) * bin_width,
        estimates=sums[occupied] / counts[occupied],
        counts=counts[occupied],
        bin_width=bin_width,
    )


def sample_covariance(values, max_offset=None, center=True):
    """
        Unbiased sample covariance of evenly spaced data,
        c(k) = 1 / (N - k) * sum_n y_n y_{n+k}, for k = 0..max_offset,
        computed through the FFT.
    """
    values = np.asarray(values, dtype=float)
    n = values.size
    max_offset = n - 1 if max_offset is None else int(max_offset)

    if n < 2 or not 0 <= max_offset < n:
        raise ValueError("Please provide a valid max_offset")

    if center:
        values = values - np.mean(values)

    size = 1 << int(np.ceil(np.log2(2 * n)))
    spectrum = np.fft.rfft(values, size)
    products = np.fft.irfft(spectrum * np.conj(spectrum), size)[:max_offset + 1]

    return products / (n - np.arange(max_offset + 1))


def _fourier_power(times, values, freqs):
    """
        |sum_i values_i exp(-j 2 pi xi t_i)|^2 for every frequency, in blocks.
    """
    power = np.empty(freqs.size)

    for start in range(0, freqs.size, _FREQ_BLOCK):
        block = freqs[start:start + _FREQ_BLOCK]
        phase = -2.0 * np.pi * np.outer(times, block)
        real = values @ np.cos(phase)
        imag = values @ np.sin(phase)
        power[start:start + block.size] = real ** 2 + imag ** 2

    return power


def _check_grid(ts, freqs, diagnostics):
    if freqs[-1] > ts.nyquist * (1.0 + 1e-9):
        diagnostics['nyquist_warning'] = True
        logger.warning("Frequency grid reaches %.6g, beyond the Nyquist estimate %.6g",
                       freqs[-1], ts.nyquist)


def _validate_scaling(scaling):
    if scaling not in SCALINGS:
        raise ValueError("Please provide a valid scaling")


def _periodogram_values(ts, freqs, window, scaling):
    values = ts.values - np.mean(ts.values)
    weights = window_weights(ts.times, window)
    power = _fourier_power(ts.times, values * weights, freqs) / ts.n

    if scaling == "density":
        # One-sided density: integrates to the variance over [0, Nyquist]
        power = 2.0 * ts.mean_gap * power

    return power


def _finish(ts, freqs, psd, diagnostics):
    estimate = SpectralEstimate(freqs, psd, onesided=True, diagnostics=diagnostics)

    if estimate.total_mass == 0.0:
        estimate.diagnostics['zero_mass'] = True
        logger.warning("Spectral estimate carries no mass (constant or zero signal)")

    return estimate


def periodogram(ts, freqs=None, window=None, scaling="density"):
    """
        Periodogram of a (possibly unevenly sampled) series on a frequency grid,

            S(xi) = c / n * |sum_i y_i w(t_i) exp(-j 2 pi xi t_i)|^2

        where y is mean-removed, w are window weights renormalised so that
        sum w^2 = n, and c = 2 * mean time gap for scaling="density" (so the
        estimate integrates to the variance over [0, Nyquist]) or c = 1 for
        scaling="spectrum". A grid beyond the Nyquist estimate is allowed and
        flagged in the diagnostics.

        Supported Arguments
            ts: (TimeSeries) Observations
            freqs=None: (Array) Uniform frequency grid, defaults to frequency_grid(ts)
            window=None: (String) None, "hann" or "hamming"
            scaling="density": (String) "density" or "spectrum"
    """
    validate_window_field(window)
    _validate_scaling(scaling)
    freqs = frequency_grid(ts) if freqs is None else np.asarray(freqs, dtype=float)

    diagnostics = {'estimator': 'periodogram', 'window': window, 'segments': 1}
    _check_grid(ts, freqs, diagnostics)

    return _finish(ts, freqs, _periodogram_values(ts, freqs, window, scaling), diagnostics)


def segment_bounds(n, segments, overlap=0.0):
    """
        (start, stop) indices of `segments` equal-length segments covering n
        samples, consecutive segments overlapping by the given fraction.
    """
    validate_segments_field(segments)
    validate_overlap_field(overlap)

    if segments == 1:
        return [(0, n)]

    length = int(n // (segments - (segments - 1) * overlap))
    starts = np.rint(np.linspace(0, n - length, segments)).astype(int)

    return [(int(start), int(start) + length) for start in starts]


def _average_segments(ts, freqs, bounds, window, scaling, diagnostics):
    if min(stop - start for start, stop in bounds) < MIN_SEGMENT_POINTS:
        raise InsufficientDataError(
            f"Every segment needs at least {MIN_SEGMENT_POINTS} observations")

    freqs = frequency_grid(ts) if freqs is None else np.asarray(freqs, dtype=float)
    _check_grid(ts, freqs, diagnostics)

    psd = np.zeros(freqs.size)
    for start, stop in bounds:
        psd += _periodogram_values(ts.segment(start, stop), freqs, window, scaling)

    return _finish(ts, freqs, psd / len(bounds), diagnostics)


def bartlett(ts, freqs=None, segments=4, window=None, scaling="density"):
    """
        Bartlett estimate: the mean of the periodograms of `segments`
        contiguous, non-overlapping segments.

        Supported Arguments
            ts: (TimeSeries) Observations
            freqs=None: (Array) Uniform frequency grid, defaults to frequency_grid(ts)
            segments=4: (Integer) Number of segments, each with at least 16 points
            window=None: (String) None, "hann" or "hamming"
            scaling="density": (String) "density" or "spectrum"
    """
    validate_window_field(window)
    _validate_scaling(scaling)
    bounds = segment_bounds(ts.n, segments, 0.0)

    diagnostics = {'estimator': 'bartlett', 'window': window, 'segments': segments}
    return _average_segments(ts, freqs, bounds, window, scaling, diagnostics)


def welch(ts, freqs=None, segments=4, overlap=0.5, window="hann", scaling="density"):
    """
        Welch estimate: the mean of the windowed periodograms of `segments`
        overlapping segments. With overlap=0 and no window it equals the
        Bartlett estimate.

        Supported Arguments
            ts: (TimeSeries) Observations
            freqs=None: (Array) Uniform frequency grid, defaults to frequency_grid(ts)
            segments=4: (Integer) Number of segments, each with at least 16 points
            overlap=0.5: (Float) Overlap fraction between segments, in [0, 0.9]
            window="hann": (String) None, "hann" or "hamming"
            scaling="density": (String) "density" or "spectrum"
    """
    validate_window_field(window)
    _validate_scaling(scaling)
    bounds = segment_bounds(ts.n, segments, overlap)

    diagnostics = {'estimator': 'welch', 'window': window, 'segments': segments,
                   'overlap': overlap}
    return _average_segments(ts, freqs, bounds, window, scaling, diagnostics)


def psd_from_covariance(cov, freqs):
    """
        Two-sided PSD obtained as the cosine transform of the even extension
        of a binned covariance,

            S(xi) = dtau * (K(0) + 2 * sum_{k>=1} K(tau_k) cos(2 pi xi tau_k))

        with dtau the bin width. Negative values are clipped to zero and the
        clipped mass is reported in the diagnostics.

        Supported Arguments
            cov: (EmpiricalCovariance) Binned covariance
            freqs: (Array) Uniform frequency grid
    """
    freqs = np.asarray(freqs, dtype=float)
    lags = cov.lag_centers[1:]

    psd = np.full(freqs.size, cov.estimates[0])
    for start in range(0, freqs.size, _FREQ_BLOCK):
        block = freqs[start:start + _FREQ_BLOCK]
        psd[start:start + block.size] += 2.0 * (cov.estimates[1:] @ np.cos(
            2.0 * np.pi * np.outer(lags, block)))
    psd = psd * cov.bin_width

    spacing = float(freqs[1] - freqs[0]) if freqs.size > 1 else 0.0
    negative = np.clip(psd, None, 0.0)
    diagnostics = {
        'estimator': 'covariance_transform',
        'clipped_mass': float(-np.sum(negative) * spacing),
    }
    if diagnostics['clipped_mass'] > 0.0:
        logger.debug("Clipped %.3g of negative mass from the covariance transform",
                     diagnostics['clipped_mass'])

    return SpectralEstimate(freqs, np.clip(psd, 0.0, None), onesided=False,
                            diagnostics=diagnostics)
