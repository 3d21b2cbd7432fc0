"""Empirical covariance estimators"""

from .functional import empirical_covariance, psd_from_covariance
from .periodogram import validate_grid_fields
from .utils import DEFAULT_N_FREQS, get_estimator_details, validate_positive_field


def covariance_transform(ts, freqs, bin_width=None, max_lag=None):
    """
        PSD estimate obtained by Fourier-transforming the binned empirical covariance.
    """
    return psd_from_covariance(empirical_covariance(ts, bin_width, max_lag), freqs)


# pylint: disable=too-few-public-methods
class Covariance:
    """
        Binned empirical covariance, the statistic used by temporal divergences.

        Supported Arguments
            bin_width=None: (Float) Lag bin width, defaults to the median time gap
            max_lag=None: (Float) Largest lag, defaults to the span of the data
    """

    def __init__(self, bin_width=None, max_lag=None):
        validate_positive_field(bin_width, "bin_width")
        validate_positive_field(max_lag, "max_lag")

        self.__bin_width = bin_width
        self.__max_lag = max_lag

    def get_estimator(self):
        """
            Returns the details of the estimator

            There is no need to call this method as this is used by the
            GVM model to run the estimator
        """
        return get_estimator_details('Covariance', 'temporal', empirical_covariance, {
            'bin_width': self.__bin_width,
            'max_lag': self.__max_lag
        })


# pylint: disable=too-few-public-methods
class CovarianceTransform:
    """
        Two-sided PSD estimate computed as the Fourier transform of the
        binned empirical covariance.

        Supported Arguments
            bin_width=None: (Float) Lag bin width, defaults to the median time gap
            max_lag=None: (Float) Largest lag, defaults to the span of the data
            n_freqs=500: (Integer) Number of frequency bins
            fmin=None: (Float) Lowest grid frequency, defaults to 1 / span
            fmax=None: (Float) Highest grid frequency, defaults to the Nyquist estimate
    """

    # pylint: disable=too-many-arguments
    def __init__(self, bin_width=None, max_lag=None, n_freqs=DEFAULT_N_FREQS, fmin=None,
                 fmax=None):
        validate_positive_field(bin_width, "bin_width")
        validate_positive_field(max_lag, "max_lag")
        validate_grid_fields(n_freqs, fmin, fmax)

        self.__bin_width = bin_width
        self.__max_lag = max_lag
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
        return get_estimator_details('CovarianceTransform', 'spectral', covariance_transform, {
            'bin_width': self.__bin_width,
            'max_lag': self.__max_lag
        })
