"""Exact solver"""

from .utils import EXACT


# pylint: disable=too-few-public-methods
class Exact:
    """
        Closed-form minimiser of the W2 loss over a location-scale family.
        Valid only with the freq:w2 divergence and the ExpCos, Sinc or
        Cosine families; runs in a single pass.

        Supported Arguments
            None
    """

    def get_optimizer(self):
        """
            Method used for getting the details of the optimizer

            This method is used by the gvmpy solvers, there is no need to
            call it directly.
        """
        return {
            'optimizer': EXACT,
            'keyword_arguments': {}
        }
