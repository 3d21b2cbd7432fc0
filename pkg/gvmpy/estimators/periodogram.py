"""Periodogram estimator"""

from .functional import periodogram
from .utils import (DEFAULT_N_FREQS, SCALINGS, get_estimator_details,
                    validate_positive_field, validate_window_field)


def validate_grid_fields(n_freqs, fmin, fmax):
    """
        A function that validates the frequency grid fields
    """
    if not isinstance(n_freqs, int) or isinstance(n_freqs, bool) or n_freqs < 2:
        raise ValueError("Please provide a valid n_freqs")

    if fmin is not None and (isinstance(fmin, bool) or not isinstance(fmin, (int, float))
                             or fmin < 0):
        raise ValueError("Please provide a valid fmin")

    validate_positive_field(fmax, "fmax")

    if fmin is not None and fmax is not None and fmin >= fmax:
        raise ValueError("Please provide a valid fmin")


# pylint: disable=too-few-public-methods
class Periodogram:
    """
        The classic Periodogram PSD estimator.

        Supported Arguments
            window=None: (String) None, "hann" or "hamming"
            n_freqs=500: (Integer) Number of frequency bins
            fmin=None: (Float) Lowest grid frequency, defaults to 1 / span
            fmax=None: (Float) Highest grid frequency, defaults to the Nyquist estimate
            scaling="density": (String) "density" or "spectrum"
    """

    # pylint: disable=too-many-arguments
    def __init__(self, window=None, n_freqs=DEFAULT_N_FREQS, fmin=None, fmax=None,
                 scaling="density"):
        validate_window_field(window)
        validate_grid_fields(n_freqs, fmin, fmax)

        if scaling not in SCALINGS:
            raise ValueError("Please provide a valid scaling")

        self.__window = window
        self.__n_freqs = n_freqs
        self.__fmin = fmin
        self.__fmax = fmax
        self.__scaling = scaling

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
        return get_estimator_details('Periodogram', 'spectral', periodogram, {
            'window': self.__window,
            'scaling': self.__scaling
        })
