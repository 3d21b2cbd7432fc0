"""
    Parametric stationary kernel families.

    Every family is evaluable both as a covariance K(tau) and as a PSD
    S(xi), and its hyperparameters can be moved between the frequency-domain
    layout (magnitude, location, scale) and the time-domain layout used by
    temporal fits and by the GP likelihood.
"""

from .base import KernelFamily, FREQUENCY_DOMAIN, TIME_DOMAIN
from .exp_cos import ExpCos
from .sinc import Sinc
from .cosine import Cosine
from .spectral_mixture import SpectralMixtureSE, SpectralMixtureRect
from .isotropic_se import IsotropicSE
from .kernel_model import KernelModel, FAMILIES, family_from_id, is_valid_family
from .operations import eval_kernel, eval_psd, psd_mass, params_freq_to_time, params_time_to_freq
from .prototypes import (GAUSSIAN_PROTOTYPE, RECT_PROTOTYPE, DIRAC_PROTOTYPE,
                         quantile_of_prototype, prototype_partial_integral,
                         prototype_second_moment)
