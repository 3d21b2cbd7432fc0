"""Exceptions raised by gvmpy"""


class GVMError(Exception):
    """
        Base class for every error raised by gvmpy.
    """


class ParameterDomainError(GVMError, ValueError):
    """
        Raised when a hyperparameter vector violates its family constraints,
        e.g. a non-positive scale or a negative magnitude.
    """


class InsufficientDataError(GVMError):
    """
        Raised when an estimator does not have enough observations (or
        enough non-empty lag bins) to produce a usable statistic.
    """


class DegenerateSpectrumError(GVMError):
    """
        Raised when a spectral estimate carries no mass, so it can not be
        normalised into a density.
    """


class ConditioningError(GVMError):
    """
        Raised when a Gram matrix stays non positive definite after the
        whole jitter schedule has been tried.
    """


class InitializationError(GVMError):
    """
        Raised when the loss is not finite at the initial hyperparameters.
    """


class ConfigError(GVMError, ValueError):
    """
        Raised when an experiment or fit configuration fails validation.
    """
