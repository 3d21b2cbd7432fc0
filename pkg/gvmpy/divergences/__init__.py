"""
    Discrepancies between data-driven estimates and kernel models.

    Temporal divergences (L1, L2) compare covariances over lags; spectral
    ones (L1, L2, W1, W2, KL, IS) compare PSDs over frequencies. W1 and W2
    work on quantile functions of the unit-mass normalised spectra, and W2
    is always reported squared.
"""

from .quantiles import QuantileTable, quantile_from_density, quantile_from_spectrum
from .utils import TEMPORAL_DOMAIN, SPECTRAL_DOMAIN, is_valid_divergence
from .l1 import L1
from .l2 import L2
from .w1 import W1
from .w2 import W2
from .kl import KL
from .itakura_saito import IS
# Imported after the class submodules so the functions are not shadowed by them
from .functional import l1, l2, w1, w2, kl, itakura_saito, wasserstein_tables
from .losses import (parse_divergence, divergence, temporal_residual, temporal_loss,
                     spectral_loss, w2_to_location_scale)
