"""Powell's conjugate direction search"""

from .utils import POWELL


# pylint: disable=too-few-public-methods
class Powell:
    """
        Derivative-free Powell search, run by scipy.optimize.minimize on
        log-transformed parameters.

        Supported Arguments
            initial_step=0.1: (Float) Length of the initial search directions
                in log-parameter units
    """

    def __init__(self, initial_step=0.1):
        if isinstance(initial_step, bool) or not isinstance(initial_step, float) \
                or not initial_step > 0.0:
            raise ValueError("Please provide a valid initial_step")

        self.__initial_step = initial_step

    def get_optimizer(self):
        """
            Method used for getting the details of the optimizer

            This method is used by the gvmpy solvers, there is no need to
            call it directly.
        """
        return {
            'optimizer': POWELL,
            'keyword_arguments': {
                'initial_step': self.__initial_step
            }
        }
