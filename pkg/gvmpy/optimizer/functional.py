"""Derivative-free minimisation with best-seen tracking"""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from ..exceptions import GVMError, InitializationError
from .utils import NELDER_MEAD, POWELL

logger = logging.getLogger(__name__)

# Value returned to scipy for trial points whose loss can not be evaluated
REJECTED_LOSS = 1e100


@dataclass
class SearchOutcome:
    """
        Result of a minimisation: the best point seen, its loss, and the
        best-so-far loss after every iteration (non-increasing).
    """
    x: np.ndarray
    loss: float
    iterations: int
    evaluations: int
    rejected: int
    converged: bool
    message: str = ""
    history: list = field(default_factory=list)


class _BestSeen:
    def __init__(self, loss):
        self.loss = loss
        self.best_x = None
        self.best_loss = np.inf
        self.evaluations = 0
        self.rejected = 0
        self.history = []

    def __call__(self, x):
        self.evaluations += 1

        try:
            with np.errstate(all="ignore"):
                value = float(self.loss(x))
        except (GVMError, ValueError, FloatingPointError, np.linalg.LinAlgError):
            value = np.inf

        if not np.isfinite(value):
            self.rejected += 1
            return REJECTED_LOSS

        if value < self.best_loss:
            self.best_loss = value
            self.best_x = np.array(x, dtype=float)

        return value

    def record(self, *_):
        self.history.append(self.best_loss)


def minimize_loss(loss, x0, optimizer, max_iters, tolerance):
    """
        Minimises `loss` from x0 with scipy's Nelder-Mead or Powell search.

        Trial points whose loss raises a gvmpy/numpy error or is not finite are
        rejected and the search continues; the best point seen is returned.

        Supported Arguments
            loss: (Callable) Maps an unconstrained vector to a real
            x0: (Array) Starting point
            optimizer: (Dict) Details returned by NelderMead/Powell get_optimizer()
            max_iters: (Integer) Iteration cap
            tolerance: (Float) Stopping tolerance on the loss and on x
    """
    x0 = np.asarray(x0, dtype=float)
    tracker = _BestSeen(loss)

    if tracker(x0) == REJECTED_LOSS:
        raise InitializationError("The loss is not finite at the initial point")
    tracker.record()

    method = optimizer['optimizer']
    step = optimizer['keyword_arguments'].get('initial_step', 0.1)
    eye = np.eye(x0.size)

    if method == NELDER_MEAD:
        options = {
            'maxiter': max_iters,
            'xatol': tolerance,
            'fatol': tolerance,
            'adaptive': optimizer['keyword_arguments'].get('adaptive', False),
            'initial_simplex': np.vstack([x0, x0 + step * eye])
        }
        method_name = "Nelder-Mead"
    elif method == POWELL:
        options = {'maxiter': max_iters, 'xtol': tolerance, 'ftol': tolerance,
                   'direc': step * eye}
        method_name = "Powell"
    else:
        raise ValueError("Please provide a valid optimizer")

    result = minimize(tracker, x0, method=method_name, callback=tracker.record, options=options)

    converged = bool(result.success) and int(result.nit) < max_iters
    if not converged:
        logger.warning("%s stopped without converging after %d iterations: %s",
                       method_name, result.nit, result.message)
    else:
        logger.debug("%s converged after %d iterations, loss %.6g",
                     method_name, result.nit, tracker.best_loss)

    return SearchOutcome(x=tracker.best_x, loss=tracker.best_loss, iterations=int(result.nit),
                         evaluations=tracker.evaluations, rejected=tracker.rejected,
                         converged=converged, message=str(result.message),
                         history=tracker.history)
