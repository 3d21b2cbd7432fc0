"""Utility functions shared by the estimators"""

import numpy as np
from scipy.signal import get_window

# Default number of frequency bins; with k fixed the spectral estimators are linear in n
DEFAULT_N_FREQS = 500

WINDOWS = (None, "hann", "hamming")
SCALINGS = ("density", "spectrum")

# Resolution used to interpolate a window at uneven sample positions
_WINDOW_RESOLUTION = 4097


def validate_window_field(window):
    """
        A function that validates the window field
    """
    if window not in WINDOWS:
        raise ValueError("Please provide a valid window")


def validate_segments_field(segments):
    """
        A function that validates the segments field
    """
    if not isinstance(segments, int) or isinstance(segments, bool) or segments < 1:
        raise ValueError("Please provide a valid segments")


def validate_overlap_field(overlap):
    """
        A function that validates the overlap field, a fraction in [0, 0.9]
    """
    if isinstance(overlap, bool) or not isinstance(overlap, (int, float)) \
            or not 0.0 <= overlap <= 0.9:
        raise ValueError("Please provide a valid overlap")


def validate_positive_field(value, name, optional=True):
    """
        A function that validates an optional positive number
    """
    if value is None and optional:
        return

    if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0:
        raise ValueError(f"Please provide a valid {name}")


def frequency_grid(ts, n_freqs=DEFAULT_N_FREQS, fmin=None, fmax=None):
    """
        Uniform grid of n_freqs frequencies on [fmin, fmax].

        Defaults to [1 / span, Nyquist], with Nyquist estimated as
        0.5 / median time gap.
    """
    fmin = 1.0 / ts.span if fmin is None else float(fmin)
    fmax = ts.nyquist if fmax is None else float(fmax)

    if not 0.0 <= fmin < fmax or not isinstance(n_freqs, int) or n_freqs < 2:
        raise ValueError("Please provide a valid frequency grid")

    return np.linspace(fmin, fmax, n_freqs)


def window_weights(times, window):
    """
        Window weights for samples at `times`, renormalised so that the sum
        of the squared weights equals the number of samples.

        Evenly sampled data use the scipy window directly; uneven samples
        interpolate a finely sampled scipy window at their relative position.
    """
    times = np.asarray(times, dtype=float)
    n = times.size

    if window is None:
        return np.ones(n)

    gaps = np.diff(times)
    if np.allclose(gaps, gaps[0], rtol=1e-9, atol=0.0):
        weights = get_window(window, n, fftbins=False)
    else:
        position = (times - times[0]) / (times[-1] - times[0])
        reference = get_window(window, _WINDOW_RESOLUTION, fftbins=False)
        weights = np.interp(position, np.linspace(0.0, 1.0, _WINDOW_RESOLUTION), reference)

    return weights * np.sqrt(n / np.sum(weights ** 2))


def get_estimator_details(name, domain, estimator, keyword_arguments):
    """
        Creates the details dict returned by the estimator classes
    """
    return {
        'name': name,
        'domain': domain,
        'estimator': estimator,
        'keyword_arguments': keyword_arguments
    }
