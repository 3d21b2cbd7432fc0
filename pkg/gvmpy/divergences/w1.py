"""1-Wasserstein divergence"""

from .functional import w1
from .utils import SPECTRAL_DOMAIN, get_divergence_details


# pylint: disable=too-few-public-methods
class W1:
    """
        1-Wasserstein distance between the data PSD and the model PSD, both
        normalised to unit mass. Only defined for spectra.

        Supported Arguments
            None
    """

    def get_divergence(self):
        """
            Returns the details of the divergence

            There is no need to call this method as this is used by the
            GVM model and the solvers
        """
        return get_divergence_details("w1", SPECTRAL_DOMAIN, w1, {})
