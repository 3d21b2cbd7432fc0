"""Data containers: time series, binned covariances and spectral estimates"""

from dataclasses import dataclass, field

import numpy as np

from ..exceptions import InsufficientDataError


def _frozen_array(values, dtype=float):
    values = np.array(values, dtype=dtype).ravel()
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """
        Observations y_1..y_n taken at strictly increasing times t_1..t_n.

        Supported Arguments:
            times: (Array) Observation times
            values: (Array) Observed values, same length as times
    """
    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        times = _frozen_array(self.times)
        values = _frozen_array(self.values)

        if times.size != values.size:
            raise ValueError("times and values should have the same length")

        if times.size < 2:
            raise InsufficientDataError("A time series needs at least 2 observations")

        if not (np.all(np.isfinite(times)) and np.all(np.isfinite(values))):
            raise ValueError("times and values should be finite")

        if np.any(np.diff(times) <= 0.0):
            raise ValueError("times should be strictly increasing")

        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    @property
    def n(self):
        return self.times.size

    @property
    def span(self):
        return float(self.times[-1] - self.times[0])

    @property
    def median_gap(self):
        return float(np.median(np.diff(self.times)))

    @property
    def mean_gap(self):
        return self.span / (self.n - 1)

    @property
    def nyquist(self):
        """
            Nyquist frequency estimate 0.5 / median time gap.
        """
        return 0.5 / self.median_gap

    @property
    def is_evenly_sampled(self):
        gaps = np.diff(self.times)
        return bool(np.allclose(gaps, gaps[0], rtol=1e-9, atol=0.0))

    def centered(self):
        """
            Returns the series with its sample mean removed.
        """
        return TimeSeries(self.times, self.values - np.mean(self.values))

    def segment(self, start, stop):
        """
            Returns observations start..stop-1 as a new series.
        """
        return TimeSeries(self.times[start:stop], self.values[start:stop])


@dataclass(frozen=True, eq=False)
class EmpiricalCovariance:
    """
        Binned empirical covariance: for every non-empty lag bin, the mean of
        y_i y_j over the pairs whose lag falls in that bin.

        Supported Arguments:
            lag_centers: (Array) Strictly increasing bin centres, starting at 0
            estimates: (Array) Covariance estimate per bin
            counts: (Array) Number of pairs per bin, all positive
            bin_width: (Float) Width of the lag bins
    """
    lag_centers: np.ndarray
    estimates: np.ndarray
    counts: np.ndarray
    bin_width: float

    def __post_init__(self):
        lag_centers = _frozen_array(self.lag_centers)
        estimates = _frozen_array(self.estimates)
        counts = _frozen_array(self.counts, dtype=np.int64)

        if not lag_centers.size == estimates.size == counts.size:
            raise ValueError("lag_centers, estimates and counts should have the same length")

        if lag_centers.size == 0:
            raise InsufficientDataError("An empirical covariance needs at least one bin")

        if lag_centers[0] != 0.0 or np.any(np.diff(lag_centers) <= 0.0):
            raise ValueError("lag_centers should start at 0 and be strictly increasing")

        if np.any(counts < 1) or not np.all(np.isfinite(estimates)):
            raise ValueError("counts should be positive and estimates finite")

        if not self.bin_width > 0.0:
            raise ValueError("Please provide a valid bin_width")

        object.__setattr__(self, "lag_centers", lag_centers)
        object.__setattr__(self, "estimates", estimates)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "bin_width", float(self.bin_width))

    def __len__(self):
        return self.lag_centers.size


@dataclass(frozen=True, eq=False)
class SpectralEstimate:
    """
        A PSD estimate on a uniform frequency grid.

        `onesided` tells whether the values are a one-sided density (all the
        power of a real signal on xi >= 0, as the periodograms produce) or
        the even two-sided density (as the Fourier transform of a covariance
        produces). `diagnostics` carries non-fatal findings such as Nyquist
        warnings or clipped mass.

        Supported Arguments:
            freqs: (Array) Strictly increasing, uniform, nonnegative frequencies
            psd: (Array) Nonnegative PSD values
            onesided=True: (Boolean) One-sided or two-sided density
            diagnostics=None: (Dict) Estimator diagnostics
    """
    freqs: np.ndarray
    psd: np.ndarray
    onesided: bool = True
    diagnostics: dict = field(default_factory=dict)
    total_mass: float = field(init=False)

    def __post_init__(self):
        freqs = _frozen_array(self.freqs)
        psd = _frozen_array(self.psd)

        if freqs.size != psd.size:
            raise ValueError("freqs and psd should have the same length")

        if freqs.size < 2:
            raise InsufficientDataError("A spectral estimate needs at least 2 frequencies")

        steps = np.diff(freqs)
        if np.any(freqs < 0.0) or np.any(steps <= 0.0) \
                or not np.allclose(steps, steps[0], rtol=1e-6, atol=0.0):
            raise ValueError("freqs should be a nonnegative, strictly increasing, uniform grid")

        if not np.all(np.isfinite(psd)) or np.any(psd < 0.0):
            raise ValueError("psd should be finite and nonnegative")

        object.__setattr__(self, "freqs", freqs)
        object.__setattr__(self, "psd", psd)
        object.__setattr__(self, "diagnostics", dict(self.diagnostics or {}))
        object.__setattr__(self, "total_mass", float(np.sum(psd) * steps[0]))

    @property
    def spacing(self):
        return float(self.freqs[1] - self.freqs[0])

    def __len__(self):
        return self.freqs.size
