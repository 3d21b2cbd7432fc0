"""Isotropic square-exponential kernel for multi-input data"""

import numpy as np

from .base import KernelFamily
from .prototypes import GAUSSIAN_PROTOTYPE


class IsotropicSE(KernelFamily):
    """
        Isotropic square-exponential kernel on R^d, every input dimension
        sharing the same lengthscale.

            K(r) = variance * exp(-r^2 / (2 lengthscale^2)),  r = ||t - t'||

        Lags passed to `kernel` are Euclidean distances and frequencies passed
        to `psd` are radial frequencies ||xi||. The frequency-domain theta is
        (magnitude, scale) with S(xi) = magnitude * exp(-(||xi|| / scale)^2),
        so scale = 1 / (sqrt(2) pi lengthscale) and
        variance = magnitude * (sqrt(pi) scale)^d.

        Supported Arguments:
            input_dim=1: (Integer) Dimension d of the input space
    """
    family_id = "IsotropicSE"
    prototype_id = GAUSSIAN_PROTOTYPE
    location_scale = False
    frequency_parameters = ("magnitude", "scale")
    time_parameters = ("variance", "lengthscale")
    positive_parameters = (1,)
    nonnegative_parameters = (0,)

    def __init__(self, input_dim=1):
        if not isinstance(input_dim, int) or isinstance(input_dim, bool) or input_dim < 1:
            raise ValueError("Please provide a valid input_dim")

        super().__init__(component_count=1)
        self.__input_dim = input_dim

    @property
    def input_dim(self):
        return self.__input_dim

    def component_psd(self, freqs, magnitude, scale):
        return magnitude * np.exp(-(np.abs(freqs) / scale) ** 2)

    def component_kernel(self, lags, magnitude, scale):
        variance = magnitude * (np.sqrt(np.pi) * scale) ** self.__input_dim
        return variance * np.exp(-(np.pi * scale * lags) ** 2)

    def component_to_time(self, magnitude, scale):
        variance = magnitude * (np.sqrt(np.pi) * scale) ** self.__input_dim
        return np.array([variance, 1.0 / (np.sqrt(2.0) * np.pi * scale)])

    def component_to_frequency(self, variance, lengthscale):
        scale = 1.0 / (np.sqrt(2.0) * np.pi * lengthscale)
        return np.array([variance / (np.sqrt(np.pi) * scale) ** self.__input_dim, scale])

    def keyword_arguments(self):
        return {'input_dim': self.__input_dim}
