"""Exp-cos kernel, the Square-exponential PSD family"""

import numpy as np

from .base import KernelFamily
from .prototypes import GAUSSIAN_PROTOTYPE


class ExpCos(KernelFamily):
    """
        The Exp-cos kernel, whose PSD is a square exponential bump.

            S(xi) = magnitude * exp(-((xi - location) / scale)^2)
            K(t)  = magnitude * sqrt(pi) * scale * exp(-pi^2 scale^2 t^2) * cos(2 pi location t)

        In the time domain a component is written as
        variance * exp(-gamma t^2) * cos(2 pi location t), the usual
        spectral mixture form, so theta is (variance, location, gamma).

        Supported Arguments:
            None
    """
    family_id = "ExpCos"
    prototype_id = GAUSSIAN_PROTOTYPE
    location_scale = True
    time_parameters = ("variance", "location", "gamma")

    def __init__(self):
        super().__init__(component_count=1)

    # pylint: disable=no-self-use
    def component_psd(self, freqs, magnitude, location, scale):
        return magnitude * np.exp(-((freqs - location) / scale) ** 2)

    def component_kernel(self, lags, magnitude, location, scale):
        return magnitude * np.sqrt(np.pi) * scale \
            * np.exp(-(np.pi * scale * lags) ** 2) * np.cos(2.0 * np.pi * location * lags)

    def component_to_time(self, magnitude, location, scale):
        return np.array([magnitude * np.sqrt(np.pi) * scale, location, (np.pi * scale) ** 2])

    def component_to_frequency(self, variance, location, gamma):
        scale = np.sqrt(gamma) / np.pi
        return np.array([variance / (np.sqrt(np.pi) * scale), location, scale])
