"""Initial hyperparameters for spectral mixtures"""

import logging

import numpy as np

from ..kernels import GAUSSIAN_PROTOTYPE, SpectralMixtureSE, is_valid_family

logger = logging.getLogger(__name__)

# Standard deviations of the unit-mass normalised exp(-x^2) and rect(x) prototypes
_GAUSSIAN_STD = 1.0 / np.sqrt(2.0)
_RECT_STD = 1.0 / np.sqrt(12.0)


def _local_maxima(psd):
    """
        Left ends of the plateaus (single points included) that are higher
        than both of their neighbours, grid edges counting as lower. A
        constant estimate has no peak.
    """
    peaks = []
    index = 0

    while index < psd.size:
        end = index
        while end + 1 < psd.size and psd[end + 1] == psd[index]:
            end += 1

        left_lower = index == 0 or psd[index - 1] < psd[index]
        right_lower = end == psd.size - 1 or psd[end + 1] < psd[index]
        whole_grid = index == 0 and end == psd.size - 1

        if psd[index] > 0.0 and left_lower and right_lower and not whole_grid:
            peaks.append(index)

        index = end + 1

    return peaks


def _basin(psd, peak):
    """
        Indices reached by walking down from the peak on both sides.
    """
    start = peak
    while start > 0 and psd[start - 1] <= psd[start]:
        start -= 1

    stop = peak
    while stop < psd.size - 1 and psd[stop + 1] <= psd[stop]:
        stop += 1

    return start, stop + 1


def _unit_mass(prototype_id, scale):
    return np.sqrt(np.pi) * scale if prototype_id == GAUSSIAN_PROTOTYPE else scale


def initialize_mixture(s, components, family=None):
    """
        Peak-picking initialisation of a spectral mixture.

        Locations are the `components` local maxima of the estimate with
        the largest local mass (ties: higher mass first, then lower
        frequency). Scales follow the spread of the mass in the basin of
        each peak and magnitudes its mass. Components left over when the
        estimate has fewer peaks are spread uniformly over the grid.

        Supported Arguments
            s: (SpectralEstimate) PSD estimate
            components: (Integer) Number of mixture components
            family=None: (KernelFamily) SpectralMixtureSE (default) or SpectralMixtureRect
    """
    if not isinstance(components, int) or isinstance(components, bool) or components < 1:
        raise ValueError("Please provide a valid components")

    family = SpectralMixtureSE(components) if family is None else family
    if not is_valid_family(family) or family.parameters_per_component != 3:
        raise ValueError("Please provide a valid mixture family")

    psd = np.asarray(s.psd, dtype=float)
    freqs = np.asarray(s.freqs, dtype=float)
    spacing = s.spacing
    # two-sided estimates hold half of the model PSD on xi >= 0
    side = 1.0 if s.onesided else 2.0
    std_factor = _GAUSSIAN_STD if family.prototype_id == GAUSSIAN_PROTOTYPE else _RECT_STD

    peaks = []
    for peak in _local_maxima(psd):
        start, stop = _basin(psd, int(peak))
        weights = psd[start:stop]
        mass = float(np.sum(weights) * spacing)
        mean = float(np.dot(weights, freqs[start:stop]) / np.sum(weights))
        spread = float(np.sqrt(np.dot(weights, (freqs[start:stop] - mean) ** 2) / np.sum(weights)))
        peaks.append((mass, float(freqs[peak]), max(spread, spacing)))

    peaks.sort(key=lambda item: (-item[0], item[1]))
    chosen = peaks[:components]

    theta = []
    for mass, location, spread in chosen:
        scale = spread / std_factor
        theta.extend([side * mass / _unit_mass(family.prototype_id, scale), location, scale])

    missing = components - len(chosen)
    if missing > 0:
        logger.info("Found %d peaks for %d components, spreading the rest uniformly",
                    len(chosen), components)

        total = float(np.sum(psd) * spacing)
        remaining = max(total - sum(item[0] for item in chosen), 1e-6 * max(total, 1e-300))
        width = (freqs[-1] - freqs[0]) / missing
        scale = max(0.5 * width, spacing)

        for index in range(missing):
            location = freqs[0] + (index + 0.5) * width
            theta.extend([side * remaining / missing / _unit_mass(family.prototype_id, scale),
                          location, scale])

    return family.validate_theta(theta)
