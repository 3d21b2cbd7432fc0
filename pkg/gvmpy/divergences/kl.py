"""Kullback-Leibler divergence"""

from .functional import DEFAULT_FLOOR, kl
from .utils import SPECTRAL_DOMAIN, get_divergence_details, validate_floor_field


# pylint: disable=too-few-public-methods
class KL:
    """
        Generalised Kullback-Leibler divergence from the model PSD to the
        data PSD. Only defined for spectra.

        Supported Arguments
            floor=1e-12: (Float) The model PSD is floored at floor * its maximum,
                None disables the floor
    """

    def __init__(self, floor=DEFAULT_FLOOR):
        validate_floor_field(floor)

        self.__floor = floor

    def get_divergence(self):
        """
            Returns the details of the divergence

            There is no need to call this method as this is used by the
            GVM model and the solvers
        """
        return get_divergence_details("kl", SPECTRAL_DOMAIN, kl, {'floor': self.__floor})
