"""
    gvmpy: likelihood-free hyperparameter estimation for stationary
    Gaussian processes.

    A kernel family is fitted by projecting a data-driven statistic (binned
    empirical covariance or a periodogram-type PSD estimate) onto the
    family under a temporal or spectral divergence. For location-scale
    families under the 2-Wasserstein distance the projection has a closed
    form; the other cases use a derivative-free search.
"""

from .exceptions import (GVMError, ParameterDomainError, InsufficientDataError,
                         DegenerateSpectrumError, ConditioningError, InitializationError,
                         ConfigError)
from .models import GVM

__version__ = "0.1.0"
