"""FitConfig: settings of a single hyperparameter fit"""

from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from ..divergences import is_valid_divergence, parse_divergence
from ..exceptions import ConfigError
from ..kernels import family_from_id, is_valid_family
from ..optimizer import (EXACT, NELDER_MEAD, POWELL, Exact, NelderMead, Powell,
                         is_valid_optimizer)
from ..optimizer.utils import (DEFAULT_MAX_ITERS, DEFAULT_TOLERANCE, validate_max_iters_field,
                               validate_tolerance_field)

_OPTIMIZER_CLASSES = {
    EXACT: Exact,
    NELDER_MEAD: NelderMead,
    POWELL: Powell,
}

_FIELDS = ("divergence", "family", "family_options", "optimizer", "optimizer_options",
           "max_iters", "tolerance", "init", "seed", "fit_noise")


def build_optimizer(name, **keyword_arguments):
    """
        Builds an optimizer from its name: "exact", "nelder-mead" or "powell"
    """
    if name not in _OPTIMIZER_CLASSES:
        raise ConfigError(f"Please provide a valid optimizer, got {name!r}")

    try:
        return _OPTIMIZER_CLASSES[name](**keyword_arguments)
    except (TypeError, ValueError) as ex:
        raise ConfigError(f"Please provide valid optimizer_options: {ex}") from ex


# pylint: disable=too-many-instance-attributes
@dataclass
class FitConfig:
    """
        Settings of a fit. `divergence` and `optimizer` accept either gvmpy
        objects or their string ids ("freq:w2", "nelder-mead", ...);
        `init` is an optional frequency-domain theta.

        The exact optimizer is only valid with freq:w2 and a single
        location-scale family.

        Supported Arguments:
            divergence: (Divergence or String) Loss criterion
            family: (KernelFamily) Family to fit
            optimizer="nelder-mead": (Optimizer or String) exact, nelder-mead or powell
            max_iters=2000: (Integer) Iteration cap of the search
            tolerance=1e-8: (Float) Stopping tolerance on the loss
            init=None: (Array) Initial frequency-domain theta
            seed=0: (Integer) Seed recorded with the fit
            fit_noise=True: (Bool) Fit a white-noise variance in temporal fits
    """
    divergence: Any
    family: Any
    optimizer: Any = NELDER_MEAD
    max_iters: int = DEFAULT_MAX_ITERS
    tolerance: float = DEFAULT_TOLERANCE
    init: Optional[Any] = None
    seed: int = 0
    fit_noise: bool = True

    def __post_init__(self):
        if isinstance(self.divergence, str):
            self.divergence = parse_divergence(self.divergence)

        if not is_valid_divergence(self.divergence):
            raise ConfigError("Please provide a valid divergence")

        if not is_valid_family(self.family):
            raise ConfigError("Please provide a valid family")

        if isinstance(self.optimizer, str):
            self.optimizer = build_optimizer(self.optimizer)

        if not is_valid_optimizer(self.optimizer):
            raise ConfigError("Please provide a valid optimizer")

        try:
            validate_max_iters_field(self.max_iters)
            validate_tolerance_field(self.tolerance)
        except ValueError as ex:
            raise ConfigError(str(ex)) from ex

        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ConfigError("Please provide a valid seed")

        if not isinstance(self.fit_noise, bool):
            raise ConfigError("Please provide a valid fit_noise")

        if self.init is not None:
            self.init = self.family.validate_theta(self.init)

        if self.optimizer_name == EXACT and not (
                self.divergence_id == "freq:w2" and self.family.location_scale):
            raise ConfigError("The exact optimizer needs freq:w2 and a location-scale family")

    @property
    def divergence_id(self):
        return self.divergence.get_divergence()['id']

    @property
    def optimizer_name(self):
        return self.optimizer.get_optimizer()['optimizer']

    def to_dict(self):
        """
            JSON-ready representation, inverse of `from_dict`.
        """
        return {
            'divergence': self.divergence_id,
            'family': self.family.family_id,
            'family_options': self.family.keyword_arguments(),
            'optimizer': self.optimizer_name,
            'optimizer_options': self.optimizer.get_optimizer()['keyword_arguments'],
            'max_iters': self.max_iters,
            'tolerance': self.tolerance,
            'init': None if self.init is None else self.init.tolist(),
            'seed': self.seed,
            'fit_noise': self.fit_noise,
        }

    @classmethod
    def from_dict(cls, details):
        """
            Builds a FitConfig from a JSON object, rejecting unknown keys.
        """
        if not isinstance(details, dict):
            raise ConfigError("Please provide a valid fit configuration")

        unknown = sorted(set(details) - set(_FIELDS))
        if unknown:
            raise ConfigError(f"Unknown fit configuration keys: {', '.join(unknown)}")

        for key in ("divergence", "family"):
            if key not in details:
                raise ConfigError(f"The fit configuration needs a {key}")

        try:
            family = family_from_id(details["family"], **details.get("family_options", {}))
        except (TypeError, ValueError) as ex:
            raise ConfigError(f"Please provide a valid family: {ex}") from ex

        optimizer = build_optimizer(details.get("optimizer", NELDER_MEAD),
                                    **details.get("optimizer_options", {}))

        init = details.get("init")
        return cls(divergence=details["divergence"], family=family, optimizer=optimizer,
                   max_iters=details.get("max_iters", DEFAULT_MAX_ITERS),
                   tolerance=details.get("tolerance", DEFAULT_TOLERANCE),
                   init=None if init is None else np.asarray(init, dtype=float),
                   seed=details.get("seed", 0),
                   fit_noise=details.get("fit_noise", True))
