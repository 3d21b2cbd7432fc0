"""Losses of a kernel model against data-driven estimates"""

import numpy as np

from ..exceptions import ConfigError, InsufficientDataError
from ..kernels import eval_kernel, eval_psd, prototype_second_moment
from ..kernels.prototypes import prototype_partial_integral
from .itakura_saito import IS
from .kl import KL
from .l1 import L1
from .l2 import L2
from .utils import (DOMAIN_PREFIXES, SPECTRAL_DOMAIN, TEMPORAL_DOMAIN, is_valid_divergence)
from .w1 import W1
from .w2 import W2

_PREFIX_DOMAINS = {prefix: domain for domain, prefix in DOMAIN_PREFIXES.items()}


def parse_divergence(text):
    """
        Builds a divergence from its string id: "time:l1", "time:l2",
        "freq:l1", "freq:l2", "freq:w1", "freq:w2", "freq:kl" or "freq:is".
    """
    if not isinstance(text, str) or text.count(":") != 1:
        raise ConfigError(f"Please provide a valid divergence, got {text!r}")

    prefix, name = text.strip().lower().split(":")
    domain = _PREFIX_DOMAINS.get(prefix)

    try:
        if name in ("l1", "l2") and domain is not None:
            return (L1 if name == "l1" else L2)(domain)

        if domain == SPECTRAL_DOMAIN:
            return {'w1': W1, 'w2': W2, 'kl': KL, 'is': IS}[name]()
    except (KeyError, ValueError) as ex:
        raise ConfigError(f"Please provide a valid divergence, got {text!r}") from ex

    raise ConfigError(f"Please provide a valid divergence, got {text!r}")


def _details(d):
    if isinstance(d, str):
        d = parse_divergence(d)

    if not is_valid_divergence(d):
        raise ValueError("Please provide a valid divergence")

    return d.get_divergence()


def divergence(d, a, b, grid):
    """
        Evaluates the divergence d between two nonnegative functions sampled
        on the same grid.

        Supported Arguments
            d: (Divergence or String) A gvmpy divergence or its string id
            a: (Array) First function, the data estimate in the losses
            b: (Array) Second function, the model in the losses
            grid: (Array) Common grid
    """
    details = _details(d)
    return details['divergence'](a, b, grid, **details['keyword_arguments'])


def temporal_residual(model, cov):
    """
        Difference between the binned covariance estimates and the model
        kernel at the lag centres; the noise only moves the lag-0 entry.
    """
    return cov.estimates - eval_kernel(model, cov.lag_centers)


def temporal_loss(model, cov, d):
    """
        Distance between the model covariance and the binned empirical
        covariance over the lag grid.

        Supported Arguments
            model: (KernelModel) Model to score
            cov: (EmpiricalCovariance) Binned covariance of the data
            d: (Divergence or String) A temporal divergence, L1 or L2
    """
    details = _details(d)

    if details['domain'] != TEMPORAL_DOMAIN:
        raise ValueError("Please provide a temporal divergence")

    if len(cov) < 2:
        raise InsufficientDataError("A temporal loss needs at least 2 lag bins")

    return details['divergence'](cov.estimates, eval_kernel(model, cov.lag_centers),
                                 cov.lag_centers, **details['keyword_arguments'])


def spectral_loss(model, s, d):
    """
        Divergence between the spectral estimate and the model PSD on the
        frequency grid of the estimate. A two-sided estimate is compared to
        the even extension of the model PSD.

        Supported Arguments
            model: (KernelModel) Model to score
            s: (SpectralEstimate) PSD estimate of the data
            d: (Divergence or String) A spectral divergence
    """
    details = _details(d)

    if details['domain'] != SPECTRAL_DOMAIN:
        raise ValueError("Please provide a spectral divergence")

    model_psd = eval_psd(model, s.freqs, symmetric=not s.onesided)
    return details['divergence'](s.psd, model_psd, s.freqs, **details['keyword_arguments'])


def w2_to_location_scale(table, prototype_id, location, scale):
    """
        Squared 2-Wasserstein distance between the measure of a
        QuantileTable and the continuous location-scale member with the
        given prototype, location and scale.

        Q_model = location + scale * Q01, so the distance expands into
        moments of the table and the integral of Q * Q01, all exact.
    """
    cross = table.integrate_against(lambda p: prototype_partial_integral(prototype_id, p))

    value = table.second_moment() - 2.0 * location * table.mean() - 2.0 * scale * cross \
        + location ** 2 + scale ** 2 * prototype_second_moment(prototype_id)
    return float(max(value, 0.0))
