"""Maximum-likelihood refinement and its relation to the GVM estimate"""

import logging
import time
from dataclasses import dataclass

import numpy as np
import torch

from ..kernels import TIME_DOMAIN, KernelModel, is_valid_family
from ..optimizer import NelderMead, is_valid_optimizer, minimize_loss
from ..optimizer.utils import DEFAULT_TOLERANCE, validate_max_iters_field
from ..solvers import FitResult
from .gram import DEFAULT_CAP, GramMatrix, as_inputs, check_size, gram_matrix
from .likelihood import kl_divergence, nll, observations

logger = logging.getLogger(__name__)

# A refinement whose parameters leave this range (or whose loss is not finite) has diverged
DIVERGENCE_THRESHOLD = 1e6


def _initial_model(init, family, noise_variance):
    if isinstance(init, KernelModel):
        return init

    if not is_valid_family(family):
        raise ValueError("Please provide a valid kernel family")

    return KernelModel(family, init, noise_variance)


def has_diverged(loss, time_theta, noise_variance):
    """
        True when the loss is not finite or a parameter exceeds 1e6 in magnitude.
    """
    values = np.append(np.asarray(time_theta, dtype=float), noise_variance)
    return not np.isfinite(loss) or bool(np.any(np.abs(values) > DIVERGENCE_THRESHOLD))


# pylint: disable=too-many-arguments,too-many-locals
def ml_refine(init, ts, family=None, max_iters=500, noise_variance=0.0, fit_noise=None,
              optimizer=None, tolerance=DEFAULT_TOLERANCE, cap=DEFAULT_CAP):
    """
        Minimises the negative log-likelihood from an initial model with a
        derivative-free search over log time-domain parameters. Trial points whose
        Gram matrix can not be factorised are rejected and the search goes
        on, so the best-so-far nll never increases.

        The result is flagged with diagnostics['diverged'] when the loss is
        not finite or a parameter leaves [-1e6, 1e6].

        Supported Arguments
            init: (KernelModel or Array) Starting model, or frequency-domain theta
            ts: (TimeSeries or PointCloudSeries) Observations
            family=None: (KernelFamily) Family of theta when init is an array
            max_iters=500: (Integer) Iteration cap
            noise_variance=0.0: (Float) Initial noise variance when init is an array
            fit_noise=None: (Bool) Fit the noise variance, defaults to noise_variance > 0
            optimizer=None: (Optimizer) NelderMead (default) or Powell
            tolerance=1e-8: (Float) Stopping tolerance
            cap=16384: (Integer) Largest n accepted
    """
    validate_max_iters_field(max_iters)
    optimizer = NelderMead() if optimizer is None else optimizer
    if not is_valid_optimizer(optimizer):
        raise ValueError("Please provide a valid optimizer")

    start = time.perf_counter()
    model = _initial_model(init, family, noise_variance)
    family = model.family
    fit_noise = model.noise_variance > 0.0 if fit_noise is None else fit_noise

    inputs, _ = observations(ts)
    check_size(as_inputs(inputs).shape[0], cap)

    time_theta = family.to_time(model.frequency_theta)
    floor = 1e-8 * max(float(np.max(np.abs(time_theta))), 1.0)
    x0 = np.log(np.maximum(time_theta, floor))
    if fit_noise:
        x0 = np.append(x0, np.log(max(model.noise_variance, floor)))

    def to_model(vector):
        values = np.exp(vector)
        if fit_noise:
            return KernelModel(family, values[:-1], values[-1], TIME_DOMAIN)
        return KernelModel(family, values, model.noise_variance, TIME_DOMAIN)

    def loss(vector):
        return nll(to_model(vector), ts, cap)

    init_nll = loss(x0)
    outcome = minimize_loss(loss, x0, optimizer.get_optimizer(), max_iters, tolerance)
    best = to_model(outcome.x)

    diverged = has_diverged(outcome.loss, best.theta, best.noise_variance)
    if diverged:
        logger.warning("Maximum-likelihood refinement diverged")

    return FitResult(family=family, theta_star=np.array(best.frequency_theta),
                     loss=outcome.loss, iterations=outcome.iterations,
                     elapsed=time.perf_counter() - start, noise_variance=best.noise_variance,
                     converged=outcome.converged, success=not diverged, divergence="nll",
                     optimizer=optimizer.get_optimizer()['optimizer'],
                     diagnostics={'init_nll': init_nll, 'diverged': diverged,
                                  'evaluations': outcome.evaluations,
                                  'rejected_trials': outcome.rejected},
                     history=outcome.history)


@dataclass
class BoundReport:
    """
        D_KL(K0 || K*) next to the bound
        1/2 ||K0^-1||_2 ||K*^-1||_2 ||K0 - K*||_F.
    """
    divergence: float
    bound: float
    inverse_norm_true: float
    inverse_norm_fitted: float
    frobenius_gap: float

    @property
    def holds(self):
        return self.bound >= self.divergence


def ml_bound_report(k0, theta_star_model, times, cap=DEFAULT_CAP):
    """
        Compares the KL divergence from the true GP to the fitted one with
        the norm bound that links the GVM estimate to the ML one. The
        inequality is reported, not enforced: it needs the Gram matrices to
        be well conditioned.

        Supported Arguments
            k0: (GramMatrix, Array or KernelModel) True covariance, or the true model
            theta_star_model: (KernelModel) Fitted model
            times: (Array) Observation times or locations
    """
    if isinstance(k0, KernelModel):
        k0 = gram_matrix(k0, times, cap)
    elif not isinstance(k0, GramMatrix):
        k0 = GramMatrix.from_matrix(k0)

    fitted = gram_matrix(theta_star_model, times, cap)

    inverse_true = float(torch.linalg.matrix_norm(k0.inverse(), ord=2))
    inverse_fitted = float(torch.linalg.matrix_norm(fitted.inverse(), ord=2))
    gap = float(torch.linalg.matrix_norm(k0.matrix - fitted.matrix, ord="fro"))

    report = BoundReport(divergence=kl_divergence(k0, fitted),
                         bound=0.5 * inverse_true * inverse_fitted * gap,
                         inverse_norm_true=inverse_true, inverse_norm_fitted=inverse_fitted,
                         frobenius_gap=gap)

    if not report.holds:
        logger.warning("KL divergence %.4g exceeds the norm bound %.4g",
                       report.divergence, report.bound)

    return report
