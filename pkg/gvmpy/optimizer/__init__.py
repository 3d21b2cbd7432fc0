"""
    Optimizers used by the gvmpy solvers.

    Exact selects the closed-form W2 solution for location-scale
    families; NelderMead and Powell select a derivative-free search with
    scipy.optimize.minimize over log-transformed hyperparameters.
"""

from .exact import Exact
from .nelder_mead import NelderMead
from .powell import Powell
from .functional import minimize_loss, SearchOutcome
from .utils import EXACT, NELDER_MEAD, POWELL, is_valid_optimizer
