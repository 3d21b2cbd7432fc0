"""
    Hyperparameter estimation.

    fit_w2_location_scale is the single-pass closed-form solution of the
    W2 problem for location-scale families; fit_general minimises any
    temporal or spectral loss with a derivative-free search.
"""

from .config import FitConfig, build_optimizer
from .result import FitResult, to_jsonable
from .exact import fit_w2_location_scale, verify_first_order, FirstOrderReport, total_power
from .initialization import initialize_mixture
from .general import fit_general, default_init
from .metrics import percentage_relative_error, relative_mean_absolute_error
