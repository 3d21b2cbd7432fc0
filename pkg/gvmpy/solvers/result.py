"""FitResult: outcome of a hyperparameter fit"""

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from ..kernels import FREQUENCY_DOMAIN, TIME_DOMAIN, KernelModel, family_from_id


def to_jsonable(value):
    """
        Converts numpy scalars/arrays nested in dicts and lists to plain Python values.
    """
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}

    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]

    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())

    if isinstance(value, np.bool_):
        return bool(value)

    if isinstance(value, np.integer):
        return int(value)

    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if np.isfinite(value) else None

    return value


# pylint: disable=too-many-instance-attributes
@dataclass
class FitResult:
    """
        Outcome of a fit. `theta_star` is the frequency-domain theta of the
        family (None when `success` is False, e.g. an exact solution with a
        non-positive scale), `history` the best-so-far loss per iteration and
        `diagnostics` carries estimator warnings, normalisation constants and
        the recovered magnitude and noise.
    """
    family: Any
    theta_star: Optional[np.ndarray]
    loss: float
    iterations: int = 0
    elapsed: float = 0.0
    noise_variance: float = 0.0
    converged: bool = True
    success: bool = True
    divergence: str = ""
    optimizer: str = ""
    diagnostics: dict = field(default_factory=dict)
    history: list = field(default_factory=list)

    @property
    def model(self):
        """
            The fitted KernelModel, frequency-domain theta.
        """
        if self.theta_star is None:
            raise ValueError("The fit did not produce valid hyperparameters")

        return KernelModel(self.family, self.theta_star, self.noise_variance, FREQUENCY_DOMAIN)

    @property
    def time_theta(self):
        return self.family.to_time(self.model.frequency_theta)

    def to_dict(self):
        """
            JSON-ready representation, inverse of `from_dict`.
        """
        details = {
            'family': self.family.family_id,
            'family_options': self.family.keyword_arguments(),
            'parameters': self.family.parameter_names(FREQUENCY_DOMAIN),
            'theta_star': None,
            'time_parameters': self.family.parameter_names(TIME_DOMAIN),
            'time_theta': None,
            'noise_variance': self.noise_variance,
            'loss': self.loss,
            'iterations': self.iterations,
            'elapsed': self.elapsed,
            'converged': self.converged,
            'success': self.success,
            'divergence': self.divergence,
            'optimizer': self.optimizer,
            'diagnostics': self.diagnostics,
            'history': self.history,
        }

        if self.theta_star is not None:
            details['theta_star'] = self.theta_star
            details['time_theta'] = self.time_theta

        return to_jsonable(details)

    @classmethod
    def from_dict(cls, details):
        """
            Rebuilds a FitResult written by `to_dict`.
        """
        try:
            family = family_from_id(details['family'], **details.get('family_options', {}))
            theta = details['theta_star']
            loss = details['loss']
        except (KeyError, TypeError) as ex:
            raise ValueError("Please provide a valid fit result") from ex

        return cls(family=family,
                   theta_star=None if theta is None else np.asarray(theta, dtype=float),
                   loss=np.nan if loss is None else float(loss),
                   iterations=int(details.get('iterations', 0)),
                   elapsed=float(details.get('elapsed', 0.0)),
                   noise_variance=float(details.get('noise_variance', 0.0)),
                   converged=bool(details.get('converged', True)),
                   success=bool(details.get('success', True)),
                   divergence=details.get('divergence', ""),
                   optimizer=details.get('optimizer', ""),
                   diagnostics=dict(details.get('diagnostics', {})),
                   history=list(details.get('history', [])))
