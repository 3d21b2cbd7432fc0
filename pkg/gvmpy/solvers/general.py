"""Derivative-free fit of any family under any divergence"""

import logging
import time

import numpy as np

from ..divergences import SPECTRAL_DOMAIN, TEMPORAL_DOMAIN, spectral_loss, temporal_loss
from ..estimators import EmpiricalCovariance, SpectralEstimate, psd_from_covariance
from ..estimators.utils import DEFAULT_N_FREQS
from ..exceptions import InitializationError
from ..kernels import (FREQUENCY_DOMAIN, TIME_DOMAIN, IsotropicSE, KernelModel, eval_psd,
                       psd_mass)
from ..optimizer import EXACT, minimize_loss
from .exact import fit_w2_location_scale, magnitude_from_power, total_power
from .initialization import initialize_mixture
from .result import FitResult

logger = logging.getLogger(__name__)

# Smallest value a parameter starts from, relative to the largest one, before the log map
_INIT_FLOOR = 1e-8

# Divergences that ignore the overall magnitude of the spectra
_MASS_FREE = ("w1", "w2")


def _spectrum_of(data):
    if isinstance(data, SpectralEstimate):
        return data

    # the lag-0 bin carries the white noise, replace it by the signal variance
    estimates = np.array(data.estimates)
    estimates[0] = _signal_variance(data)
    signal = EmpiricalCovariance(data.lag_centers, estimates, data.counts, data.bin_width)

    freqs = np.linspace(0.0, 0.5 / data.bin_width, DEFAULT_N_FREQS)
    return psd_from_covariance(signal, freqs)


def _signal_variance(cov):
    """
        Variance of the noise-free signal, read at the first non-zero lag
        bin so that the white noise in the lag-0 bin is left out.
    """
    reference = abs(float(cov.estimates[0]))
    return max(float(cov.estimates[1]), 1e-3 * reference, np.finfo(float).tiny)


def _isotropic_init(cov, family):
    variance = _signal_variance(cov)
    below = np.flatnonzero(cov.estimates[1:] < variance * np.exp(-0.5))

    if below.size:
        lengthscale = float(cov.lag_centers[1 + below[0]])
    else:
        lengthscale = 0.5 * float(cov.lag_centers[-1])

    return family.to_frequency(np.array([variance, max(lengthscale, cov.bin_width)]))


def default_init(data, family):
    """
        Starting theta (frequency domain) when none is configured: the exact
        W2 solution for single location-scale families, peak picking for
        mixtures, and a covariance-shape heuristic for IsotropicSE.
    """
    if isinstance(family, IsotropicSE):
        if not isinstance(data, EmpiricalCovariance):
            raise InitializationError("IsotropicSE is fitted from a radial covariance")
        return _isotropic_init(data, family)

    spectrum = _spectrum_of(data)

    if family.location_scale:
        result = fit_w2_location_scale(spectrum, family)
        if result.success:
            theta = np.array(result.theta_star)
        else:
            peak = float(spectrum.freqs[int(np.argmax(spectrum.psd))])
            scale = 0.1 * float(spectrum.freqs[-1] - spectrum.freqs[0])
            theta = np.array([1.0, peak, scale])
            theta[0] = magnitude_from_power(family, peak, scale, total_power(spectrum))
    else:
        theta = np.array(initialize_mixture(spectrum, family.component_count, family))

    if isinstance(data, EmpiricalCovariance):
        # match the variance of the model to the signal part of the covariance
        model = KernelModel(family, theta)
        theta[0::family.parameters_per_component] *= _signal_variance(data) / psd_mass(model)

    return theta


class _LogParameters:
    """
        Maps the working-domain theta (and the noise variance) to an
        unconstrained vector through an elementwise log.
    """

    def __init__(self, family, domain, fit_noise):
        self.family = family
        self.domain = domain
        self.fit_noise = fit_noise

    def to_unconstrained(self, frequency_theta, noise_variance):
        theta = np.array(frequency_theta, dtype=float)
        if self.domain == TIME_DOMAIN:
            theta = self.family.to_time(theta)

        if self.fit_noise:
            theta = np.append(theta, noise_variance)

        floor = _INIT_FLOOR * max(float(np.max(np.abs(theta))), 1.0)
        return np.log(np.maximum(theta, floor))

    def to_model(self, vector):
        values = np.exp(vector)
        noise = 0.0

        if self.fit_noise:
            values, noise = values[:-1], values[-1]

        return KernelModel(self.family, values, noise, self.domain)


def fit_general(data, cfg):
    """
        Fits cfg.family to the data by minimising the temporal loss (for
        an EmpiricalCovariance) or the spectral loss (for a
        SpectralEstimate) with a derivative-free search over log-parameters.

        The best theta seen is returned; if the iteration cap is reached
        the result is flagged converged=False. Under W1/W2, which ignore
        the overall magnitude, the magnitudes are rescaled afterwards so
        that the model carries the total power of the estimate.

        Supported Arguments
            data: (EmpiricalCovariance or SpectralEstimate) Data statistic
            cfg: (FitConfig) Fit settings
    """
    divergence = cfg.divergence.get_divergence()

    if cfg.optimizer_name == EXACT:
        if not isinstance(data, SpectralEstimate):
            raise ValueError("The exact optimizer needs a SpectralEstimate")
        return fit_w2_location_scale(data, cfg.family)

    temporal = isinstance(data, EmpiricalCovariance)
    if not temporal and not isinstance(data, SpectralEstimate):
        raise ValueError("Please provide an EmpiricalCovariance or a SpectralEstimate")

    if divergence['domain'] != (TEMPORAL_DOMAIN if temporal else SPECTRAL_DOMAIN):
        raise ValueError(f"The divergence {divergence['id']} does not match the data")

    start = time.perf_counter()
    family = cfg.family

    init = np.array(cfg.init if cfg.init is not None else default_init(data, family))
    fit_noise = temporal and cfg.fit_noise
    noise_init = 0.0
    if fit_noise:
        noise_init = max(float(data.estimates[0]) - psd_mass(KernelModel(family, init)),
                         1e-6 * abs(float(data.estimates[0])))

    parameters = _LogParameters(family, TIME_DOMAIN if temporal else FREQUENCY_DOMAIN, fit_noise)

    if temporal:
        def loss(vector):
            return temporal_loss(parameters.to_model(vector), data, cfg.divergence)
    else:
        def loss(vector):
            return spectral_loss(parameters.to_model(vector), data, cfg.divergence)

    outcome = minimize_loss(loss, parameters.to_unconstrained(init, noise_init),
                            cfg.optimizer.get_optimizer(), cfg.max_iters, cfg.tolerance)

    best = parameters.to_model(outcome.x)
    theta = np.array(best.frequency_theta)

    diagnostics = {
        'init': init,
        'evaluations': outcome.evaluations,
        'rejected_trials': outcome.rejected,
        'message': outcome.message,
    }

    if temporal:
        diagnostics['lag0_residual'] = float(data.estimates[0]) - float(psd_mass(best)) \
            - best.noise_variance
    else:
        diagnostics.update(data.diagnostics)
        power = total_power(data)
        model_mass = float(np.sum(eval_psd(best, data.freqs, symmetric=not data.onesided))
                           * data.spacing)
        diagnostics['normalization'] = {'data': data.total_mass, 'model': model_mass}

        if divergence['name'] in _MASS_FREE and model_mass > 0.0:
            theta[0::family.parameters_per_component] *= data.total_mass / model_mass
        diagnostics['total_power'] = power

    model = KernelModel(family, theta, best.noise_variance)
    diagnostics['magnitude'] = psd_mass(model)
    diagnostics['noise_variance'] = best.noise_variance

    return FitResult(family=family, theta_star=model.frequency_theta, loss=outcome.loss,
                     iterations=outcome.iterations, elapsed=time.perf_counter() - start,
                     noise_variance=best.noise_variance, converged=outcome.converged,
                     divergence=divergence['id'], optimizer=cfg.optimizer_name,
                     diagnostics=diagnostics, history=outcome.history)
