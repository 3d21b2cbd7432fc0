"""Welch estimator"""

from .functional import welch
from .periodogram import validate_grid_fields
from .utils import (DEFAULT_N_FREQS, get_estimator_details, validate_overlap_field,
                    validate_segments_field, validate_window_field)


# pylint: disable=too-few-public-methods
class Welch:
    """
        Welch's method: averages the windowed periodograms of overlapping
        segments.

        Supported Arguments
            segments=4: (Integer) Number of segments
            overlap=0.5: (Float) Overlap fraction between consecutive segments, in [0, 0.9]
            window="hann": (String) None, "hann" or "hamming"
            n_freqs=500: (Integer) Number of frequency bins
            fmin=None: (Float) Lowest grid frequency, defaults to 1 / span
            fmax=None: (Float) Highest grid frequency, defaults to the Nyquist estimate
    """

    # pylint: disable=too-many-arguments
    def __init__(self, segments=4, overlap=0.5, window="hann", n_freqs=DEFAULT_N_FREQS,
                 fmin=None, fmax=None):
        validate_segments_field(segments)
        validate_overlap_field(overlap)
        validate_window_field(window)
        validate_grid_fields(n_freqs, fmin, fmax)

        self.__segments = segments
        self.__overlap = overlap
        self.__window = window
        self.__n_freqs = n_freqs
        self.__fmin = fmin
        self.__fmax = fmax

    def get_grid(self):
        """
            Frequency grid settings, consumed by the gvmpy models.
        """
        return {'n_freqs': self.__n_freqs, 'fmin': self.__fmin, 'fmax': self.__fmax}

    def get_estimator(self):
        """
            Returns the details of the estimator

            There is no need to call this method as this is used by the
            GVM model to run the estimator
        """
        return get_estimator_details('Welch', 'spectral', welch, {
            'segments': self.__segments,
            'overlap': self.__overlap,
            'window': self.__window
        })
