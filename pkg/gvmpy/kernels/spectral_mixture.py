"""Spectral mixture kernels built from Exp-cos and Sinc components"""

from .base import KernelFamily
from .exp_cos import ExpCos
from .sinc import Sinc


def _validate_components_field(components):
    if not isinstance(components, int) or isinstance(components, bool) or components < 1:
        raise ValueError("Please provide a valid components")


class SpectralMixtureSE(ExpCos):
    """
        Spectral mixture of square-exponential PSDs, i.e. a sum of Exp-cos
        kernels. Theta stacks (magnitude, location, scale) per component.

        A mixture is not a location-scale family, so it is fitted with the
        general solver; with a single component it evaluates exactly as
        ExpCos.

        Supported Arguments:
            components=1: (Integer) Number of mixture components
    """
    family_id = "SpectralMixtureSE"
    location_scale = False

    # pylint: disable=super-init-not-called,non-parent-init-called
    def __init__(self, components=1):
        _validate_components_field(components)
        KernelFamily.__init__(self, component_count=components)

    def keyword_arguments(self):
        return {'components': self.component_count}


class SpectralMixtureRect(Sinc):
    """
        Spectral mixture of rectangular PSDs, i.e. a sum of Sinc kernels.
        Theta stacks (magnitude, location, scale) per component.

        Supported Arguments:
            components=1: (Integer) Number of mixture components
    """
    family_id = "SpectralMixtureRect"
    location_scale = False

    # pylint: disable=super-init-not-called,non-parent-init-called
    def __init__(self, components=1):
        _validate_components_field(components)
        KernelFamily.__init__(self, component_count=components)

    def keyword_arguments(self):
        return {'components': self.component_count}
