"""Evaluation of kernel models and the time/frequency parameter maps"""

import numpy as np

from ..exceptions import ParameterDomainError
from .base import FREQUENCY_DOMAIN, TIME_DOMAIN
from .kernel_model import KernelModel


def _finite(values, name):
    values = np.asarray(values, dtype=float)

    if not np.all(np.isfinite(values)):
        raise ParameterDomainError(f"{name} should be finite")

    return values


def eval_kernel(model, lags):
    """
        Covariance K(tau) of the model at every lag, the noise variance being
        added only where the lag is exactly zero.

        Supported Arguments
            model: (KernelModel) Model to evaluate
            lags: (Array) Time lags, or distances for IsotropicSE
    """
    lags = _finite(lags, "lags")
    values = model.family.kernel(model.frequency_theta, lags)

    if model.noise_variance > 0.0:
        values = values + model.noise_variance * (lags == 0.0)

    return values


def eval_psd(model, freqs, symmetric=False):
    """
        PSD S(xi) of the model at every frequency. The white-noise floor is
        not included since it is not integrable.

        With symmetric=True the even extension (S(xi) + S(-xi)) / 2 is
        returned, which is the two-sided PSD whose Fourier pair is eval_kernel.

        Supported Arguments
            model: (KernelModel) Model to evaluate
            freqs: (Array) Frequencies
            symmetric=False: (Boolean) Return the even two-sided PSD
    """
    freqs = _finite(freqs, "freqs")
    theta = model.frequency_theta

    if symmetric:
        return 0.5 * (model.family.psd(theta, freqs) + model.family.psd(theta, -freqs))

    return model.family.psd(theta, freqs)


def psd_mass(model):
    """
        Total mass of the PSD over the real line, which equals K(0) without noise.
    """
    return float(model.family.kernel(model.frequency_theta, np.zeros(1))[0])


def params_freq_to_time(model):
    """
        Returns the same model expressed with time-domain parameters.
    """
    if model.domain == TIME_DOMAIN:
        return model

    return KernelModel(model.family, model.family.to_time(model.theta),
                       model.noise_variance, TIME_DOMAIN)


def params_time_to_freq(model):
    """
        Returns the same model expressed with frequency-domain parameters.
    """
    if model.domain == FREQUENCY_DOMAIN:
        return model

    return KernelModel(model.family, model.frequency_theta,
                       model.noise_variance, FREQUENCY_DOMAIN)
