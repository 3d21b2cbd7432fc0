"""Sinc kernel, the Rectangular PSD family"""

import numpy as np

from .base import KernelFamily
from .prototypes import RECT_PROTOTYPE, rect


class Sinc(KernelFamily):
    """
        The Sinc kernel, whose PSD is a rectangle of width `scale`
        centred at `location`.

            S(xi) = magnitude * rect((xi - location) / scale)
            K(t)  = magnitude * scale * sinc(scale t) * cos(2 pi location t)

        sinc is the normalised sinc, sin(pi x) / (pi x). The time-domain theta
        is (variance, location, bandwidth) with variance = magnitude * scale.

        Supported Arguments:
            None
    """
    family_id = "Sinc"
    prototype_id = RECT_PROTOTYPE
    location_scale = True
    time_parameters = ("variance", "location", "bandwidth")

    def __init__(self):
        super().__init__(component_count=1)

    # pylint: disable=no-self-use
    def component_psd(self, freqs, magnitude, location, scale):
        return magnitude * rect((freqs - location) / scale)

    def component_kernel(self, lags, magnitude, location, scale):
        return magnitude * scale * np.sinc(scale * lags) * np.cos(2.0 * np.pi * location * lags)

    def component_to_time(self, magnitude, location, scale):
        return np.array([magnitude * scale, location, scale])

    def component_to_frequency(self, variance, location, bandwidth):
        return np.array([variance / bandwidth, location, bandwidth])
