"""Cosine kernel, the Dirac PSD family"""

import numpy as np

from .base import KernelFamily
from .prototypes import DIRAC_PROTOTYPE, dirac_on_grid


class Cosine(KernelFamily):
    """
        The Cosine kernel K(t) = magnitude * cos(2 pi location t), whose PSD
        is a Dirac delta at `location`.

        The family has no scale: theta is (magnitude, location) in the
        frequency domain and (variance, location) in the time domain, with
        variance equal to magnitude. On a frequency grid the delta is
        discretised onto the nearest grid point.

        Supported Arguments:
            None
    """
    family_id = "Cosine"
    prototype_id = DIRAC_PROTOTYPE
    location_scale = True
    frequency_parameters = ("magnitude", "location")
    time_parameters = ("variance", "location")
    positive_parameters = ()
    nonnegative_parameters = (0, 1)

    def __init__(self):
        super().__init__(component_count=1)

    # pylint: disable=no-self-use
    def component_psd(self, freqs, magnitude, location):
        return dirac_on_grid(freqs, location, magnitude)

    def component_kernel(self, lags, magnitude, location):
        return magnitude * np.cos(2.0 * np.pi * location * lags)

    def component_to_time(self, magnitude, location):
        return np.array([magnitude, location])

    def component_to_frequency(self, variance, location):
        return np.array([variance, location])
