"""Nelder-Mead simplex search"""

from .utils import NELDER_MEAD


# pylint: disable=too-few-public-methods
class NelderMead:
    """
        Derivative-free Nelder-Mead simplex search, run by
        scipy.optimize.minimize on log-transformed parameters.

        Supported Arguments
            initial_step=0.1: (Float) Size of the initial simplex in log-parameter units
            adaptive=False: (Bool) Adapt the simplex coefficients to the dimension
    """

    def __init__(self, initial_step=0.1, adaptive=False):
        if isinstance(initial_step, bool) or not isinstance(initial_step, float) \
                or not initial_step > 0.0:
            raise ValueError("Please provide a valid initial_step")

        if not isinstance(adaptive, bool):
            raise ValueError("Please provide a valid adaptive")

        self.__initial_step = initial_step
        self.__adaptive = adaptive

    def get_optimizer(self):
        """
            Method used for getting the details of the optimizer

            This method is used by the gvmpy solvers, there is no need to
            call it directly.
        """
        return {
            'optimizer': NELDER_MEAD,
            'keyword_arguments': {
                'initial_step': self.__initial_step,
                'adaptive': self.__adaptive
            }
        }
