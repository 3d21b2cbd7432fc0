"""
    Data-driven estimators of the covariance and of the PSD.

    The functions in gvmpy.estimators.functional do the work; the classes
    Covariance, Periodogram, Bartlett, Welch and CovarianceTransform hold
    estimator settings for the GVM model.
"""

from .series import TimeSeries, EmpiricalCovariance, SpectralEstimate
from .utils import frequency_grid, window_weights
from .periodogram import Periodogram
from .bartlett import Bartlett
from .welch import Welch
from .covariance import Covariance, CovarianceTransform, covariance_transform
# Imported after the class submodules so the functions are not shadowed by them
from .functional import (empirical_covariance, sample_covariance, periodogram, bartlett,
                         welch, psd_from_covariance, segment_bounds)
