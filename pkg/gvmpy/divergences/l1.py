"""L1 divergence"""

from .functional import l1
from .utils import TEMPORAL_DOMAIN, get_divergence_details, validate_domain_field


# pylint: disable=too-few-public-methods
class L1:
    """
        Integral of the absolute difference between the data estimate and the model.

        Supported Arguments
            domain="temporal": (String) "temporal" to compare covariances over lags,
                "spectral" to compare PSDs over frequencies
    """

    def __init__(self, domain=TEMPORAL_DOMAIN):
        validate_domain_field(domain, "l1")

        self.__domain = domain

    def get_divergence(self):
        """
            Returns the details of the divergence

            There is no need to call this method as this is used by the
            GVM model and the solvers
        """
        return get_divergence_details("l1", self.__domain, l1, {})
