"""Bartlett estimator"""

from .functional import bartlett
from .periodogram import validate_grid_fields
from .utils import (DEFAULT_N_FREQS, get_estimator_details,
                    validate_segments_field, validate_window_field)


# pylint: disable=too-few-public-methods
class Bartlett:
    """
        Bartlett's method: averages the periodograms of non-overlapping
        segments to reduce the variance of the estimate.

        Supported Arguments
            segments=4: (Integer) Number of segments
            window=None: (String) None, "hann" or "hamming"
            n_freqs=500: (Integer) Number of frequency bins
            fmin=None: (Float) Lowest grid frequency, defaults to 1 / span
            fmax=None: (Float) Highest grid frequency, defaults to the Nyquist estimate
    """

    # pylint: disable=too-many-arguments
    def __init__(self, segments=4, window=None, n_freqs=DEFAULT_N_FREQS, fmin=None, fmax=None):
        validate_segments_field(segments)
        validate_window_field(window)
        validate_grid_fields(n_freqs, fmin, fmax)

        self.__segments = segments
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
        return get_estimator_details('Bartlett', 'spectral', bartlett, {
            'segments': self.__segments,
            'window': self.__window
        })
