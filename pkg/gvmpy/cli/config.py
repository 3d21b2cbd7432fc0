"""ExperimentConfig: validated JSON configuration of a CLI command"""

from dataclasses import dataclass, field

import numpy as np

from ..estimators import Bartlett, Covariance, CovarianceTransform, Periodogram, Welch
from ..exceptions import ConfigError
from ..gp import EVEN, SAMPLINGS
from ..kernels import FREQUENCY_DOMAIN, IsotropicSE, KernelModel, family_from_id
from ..multiinput import DEFAULT_BIN_WIDTH, DEFAULT_EXTENT, DEFAULT_MAX_RADIUS
from ..solvers import FitConfig

COMMANDS = ("fit", "sample", "estimate", "benchmark", "recover")

ESTIMATORS = {
    'periodogram': Periodogram,
    'bartlett': Bartlett,
    'welch': Welch,
    'covariance': Covariance,
    'covariance_transform': CovarianceTransform,
}

_COMMON_KEYS = ("seed", "out_dir")

_COMMAND_KEYS = {
    'fit': ("input", "synthetic", "estimator", "fit", "refine_ml", "ml_max_iters", "radial",
            "plots", "output"),
    'sample': ("synthetic", "output"),
    'estimate': ("input", "synthetic", "estimator", "output"),
    'benchmark': ("synthetic", "n_values", "estimator", "fit", "ml_cap", "ml_max_iters",
                  "repeats", "output"),
    'recover': ("synthetic", "priors", "runs", "estimator", "fit", "workers", "output",
                "runs_output"),
}

_SYNTHETIC_KEYS = ("family", "family_options", "theta", "domain", "noise_variance", "n", "span",
                   "sampling", "extent")

_RADIAL_KEYS = ("bin_width", "max_radius")


def _reject_unknown(details, allowed, where):
    # Checking the details, it should be a dict
    if not isinstance(details, dict):
        raise ConfigError(f"Please provide a valid {where} object")

    # Checking the keys, every key should be known
    unknown = sorted(set(details) - set(allowed))
    if unknown:
        raise ConfigError(f"Unknown keys in {where}: {', '.join(unknown)}")


def _positive_int(value, name, minimum=1):
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ConfigError(f"Please provide a valid {name}")
    return value


@dataclass(frozen=True)
class SyntheticSpec:
    """
        Generator of synthetic data: a KernelModel sampled at n times on
        [0, span] (time series) or at n locations in [0, extent]^d
        (IsotropicSE point clouds).
    """
    model: KernelModel
    n: int
    span: float = 1000.0
    sampling: str = EVEN
    extent: float = DEFAULT_EXTENT

    @property
    def is_point_cloud(self):
        return isinstance(self.model.family, IsotropicSE)

    def with_model(self, model):
        return SyntheticSpec(model, self.n, self.span, self.sampling, self.extent)

    def with_n(self, n):
        return SyntheticSpec(self.model, n, self.span, self.sampling, self.extent)


def build_synthetic(details):
    """
        Validates a `synthetic` object and builds its SyntheticSpec.
    """
    _reject_unknown(details, _SYNTHETIC_KEYS, "synthetic")

    # Building the model, KernelModel validates the theta
    try:
        family = family_from_id(details["family"], **details.get("family_options", {}))
        model = KernelModel(family, details["theta"], details.get("noise_variance", 0.0),
                            details.get("domain", FREQUENCY_DOMAIN))
    except KeyError as ex:
        raise ConfigError(f"The synthetic object needs a {ex.args[0]}") from ex
    except (TypeError, ValueError) as ex:
        raise ConfigError(f"Please provide a valid synthetic model: {ex}") from ex

    # Checking the sampling scheme
    sampling = details.get("sampling", EVEN)
    if sampling not in SAMPLINGS:
        raise ConfigError("Please provide a valid sampling")

    # Checking the span and the extent, both should be positive
    span = details.get("span", 1000.0)
    extent = details.get("extent", DEFAULT_EXTENT)
    for name, value in (("span", span), ("extent", extent)):
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0:
            raise ConfigError(f"Please provide a valid {name}")

    return SyntheticSpec(model, _positive_int(details.get("n", 1000), "n", 2), float(span),
                         sampling, float(extent))


def build_estimator(details):
    """
        Builds an estimator from {"method": ..., <constructor arguments>}.
    """
    if not isinstance(details, dict) or details.get("method") not in ESTIMATORS:
        raise ConfigError("Please provide a valid estimator method: "
                          + ", ".join(ESTIMATORS))

    # The remaining keys are the constructor arguments
    arguments = {key: value for key, value in details.items() if key != "method"}
    try:
        return ESTIMATORS[details["method"]](**arguments)
    except (TypeError, ValueError) as ex:
        raise ConfigError(f"Please provide a valid estimator: {ex}") from ex


def build_priors(details, family):
    """
        Validates the priors of a recovery study: every frequency-domain
        parameter of the family maps to a fixed value or a [low, high] range.
    """
    names = family.parameter_names(FREQUENCY_DOMAIN)
    _reject_unknown(details, names, "priors")

    priors = {}
    for name in names:
        if name not in details:
            raise ConfigError(f"The priors need a value or a range for {name}")

        # A single number is a fixed value
        value = details[name]
        bounds = value if isinstance(value, list) else [value, value]

        if len(bounds) != 2 or not all(isinstance(bound, (int, float))
                                       and not isinstance(bound, bool) for bound in bounds) \
                or not 0 <= bounds[0] <= bounds[1]:
            raise ConfigError(f"Please provide a valid prior for {name}")

        priors[name] = (float(bounds[0]), float(bounds[1]))

    return priors


# pylint: disable=too-many-instance-attributes
@dataclass
class ExperimentConfig:
    """
        Validated configuration of one CLI command. Every part is built
        once at load time so that schema errors surface before any work.
    """
    command: str
    settings: dict
    seed: int = 0
    out_dir: str = "."
    synthetic: SyntheticSpec = None
    estimator: object = None
    fit: FitConfig = None
    priors: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, command, details, seed=None, out_dir=None):
        """
            Validates a JSON object for a command; `seed` and `out_dir`
            override the values of the object.
        """
        if command not in COMMANDS:
            raise ConfigError(f"Please provide a valid command: {', '.join(COMMANDS)}")

        _reject_unknown(details, _COMMON_KEYS + _COMMAND_KEYS[command], command)

        seed = details.get("seed", 0) if seed is None else seed
        out_dir = details.get("out_dir", ".") if out_dir is None else out_dir
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise ConfigError("Please provide a valid seed")

        config = cls(command=command, settings=dict(details), seed=seed, out_dir=str(out_dir))
        config.validate()
        return config

    def validate(self):
        details = self.settings

        # Building the synthetic generator
        if "synthetic" in details:
            self.synthetic = build_synthetic(details["synthetic"])

        # Checking the data source
        if self.command in ("fit", "estimate") and ("input" in details) == \
                (self.synthetic is not None):
            raise ConfigError("Please provide exactly one of input and synthetic")

        if self.command in ("sample", "benchmark", "recover") and self.synthetic is None:
            raise ConfigError(f"The {self.command} command needs a synthetic object")

        if "input" in details and not isinstance(details["input"], str):
            raise ConfigError("Please provide a valid input path")

        # Building the estimator, point clouds are binned radially instead
        point_cloud = self.synthetic is not None and self.synthetic.is_point_cloud
        if "estimator" in details:
            self.estimator = build_estimator(details["estimator"])
        elif self.command in ("estimate", "benchmark", "recover") or (
                self.command == "fit" and not point_cloud and "radial" not in details):
            raise ConfigError(f"The {self.command} command needs an estimator")

        if "radial" in details:
            _reject_unknown(details["radial"], _RADIAL_KEYS, "radial")

        # Building the fit configuration
        if "fit" in details:
            self.fit = FitConfig.from_dict(details["fit"])
        elif self.command in ("fit", "benchmark", "recover"):
            raise ConfigError(f"The {self.command} command needs a fit object")

        # Checking the counts
        for key in ("ml_max_iters", "ml_cap", "repeats", "workers"):
            if key in details:
                _positive_int(details[key], key)

        # Checking the flags
        if "refine_ml" in details and not isinstance(details["refine_ml"], bool):
            raise ConfigError("Please provide a valid refine_ml")

        if "plots" in details and not isinstance(details["plots"], bool):
            raise ConfigError("Please provide a valid plots")

        # Checking the output paths
        for key in ("output", "runs_output"):
            if key in details and not isinstance(details[key], str):
                raise ConfigError(f"Please provide a valid {key}")

        # Checking the command specific keys
        if self.command == "benchmark":
            n_values = details.get("n_values")
            if not isinstance(n_values, list) or not n_values:
                raise ConfigError("Please provide a non-empty n_values list")
            for n in n_values:
                _positive_int(n, "n_values entry", 2)

        if self.command == "recover":
            _positive_int(details.get("runs"), "runs")
            self.priors = build_priors(details.get("priors"), self.synthetic.model.family)

            if self.fit.family != self.synthetic.model.family:
                raise ConfigError("The recovery study fits the family it samples from")

    @property
    def radial(self):
        radial = self.settings.get("radial", {})
        return radial.get("bin_width", DEFAULT_BIN_WIDTH), \
            radial.get("max_radius", DEFAULT_MAX_RADIUS)

    def get(self, key, default=None):
        return self.settings.get(key, default)

    def draw_theta(self, generator):
        """
            One draw of the frequency-domain theta from the priors.
        """
        return np.array([generator.uniform(low, high) for low, high in self.priors.values()])
