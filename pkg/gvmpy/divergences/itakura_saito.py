"""Itakura-Saito divergence"""

from .functional import DEFAULT_FLOOR, itakura_saito
from .utils import SPECTRAL_DOMAIN, get_divergence_details, validate_floor_field


# pylint: disable=too-few-public-methods
class IS:
    """
        Itakura-Saito divergence between the data PSD and the model PSD.
        Only defined for spectra.

        Supported Arguments
            floor=1e-12: (Float) Both PSDs are floored at floor * their maximum,
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
        return get_divergence_details("is", SPECTRAL_DOMAIN, itakura_saito,
                                      {'floor': self.__floor})
