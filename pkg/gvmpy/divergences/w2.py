"""2-Wasserstein divergence"""

from .functional import w2
from .utils import SPECTRAL_DOMAIN, get_divergence_details


# pylint: disable=too-few-public-methods
class W2:
    """
        Squared 2-Wasserstein distance between the data PSD and the model
        PSD, both normalised to unit mass. Only defined for spectra.

        With a location-scale family this divergence has a closed-form
        minimiser, see gvmpy.solvers.fit_w2_location_scale.

        Supported Arguments
            None
    """

    def get_divergence(self):
        """
            Returns the details of the divergence

            There is no need to call this method as this is used by the
            GVM model and the solvers
        """
        return get_divergence_details("w2", SPECTRAL_DOMAIN, w2, {})
