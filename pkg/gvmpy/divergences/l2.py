"""L2 divergence"""

from .functional import l2
from .utils import TEMPORAL_DOMAIN, get_divergence_details, validate_domain_field


# pylint: disable=too-few-public-methods
class L2:
    """
        Integral of the squared difference between the data estimate and the model.
        The value is the squared L2 distance.

        Supported Arguments
            domain="temporal": (String) "temporal" to compare covariances over lags,
                "spectral" to compare PSDs over frequencies
    """

    def __init__(self, domain=TEMPORAL_DOMAIN):
        validate_domain_field(domain, "l2")

        self.__domain = domain

    def get_divergence(self):
        """
            Returns the details of the divergence

            There is no need to call this method as this is used by the
            GVM model and the solvers
        """
        return get_divergence_details("l2", self.__domain, l2, {})
