"""Quantile functions of normalised spectra"""

from dataclasses import dataclass

import numpy as np

from ..exceptions import DegenerateSpectrumError

# Size of the uniform probability grid of a QuantileTable
DEFAULT_N_PROBS = 1000


@dataclass(frozen=True, eq=False)
class QuantileTable:
    """
        Quantile function of a normalised spectrum.

        The spectrum is treated as a discrete measure with atoms `support`
        (grid frequencies with positive mass) and unit-sum `weights`, so its
        quantile Q(p) = min{xi_i : F_i >= p} is a nondecreasing step
        function; flat stretches of the CDF resolve to their left edge.
        `values` tabulates Q on the uniform grid `probs`, with probs[0] = 0
        mapped to the left support edge and probs[-1] = 1 to the right one.
    """
    probs: np.ndarray
    values: np.ndarray
    support: np.ndarray
    weights: np.ndarray

    @property
    def cdf(self):
        cdf = np.cumsum(self.weights)
        cdf[-1] = 1.0
        return cdf

    def __call__(self, probs):
        probs = np.clip(np.asarray(probs, dtype=float), 0.0, 1.0)
        index = np.searchsorted(self.cdf, probs, side="left")
        return self.support[np.minimum(index, self.support.size - 1)]

    def mean(self):
        """
            Integral of Q over [0, 1], the mean of the measure.
        """
        return float(np.dot(self.weights, self.support))

    def second_moment(self):
        """
            Integral of Q^2 over [0, 1].
        """
        return float(np.dot(self.weights, self.support ** 2))

    def integrate_against(self, partial_integral):
        """
            Exact integral of Q(p) * q(p) over [0, 1], given G(p), the integral
            of q over [0, p]. Exact because Q is constant between CDF jumps.
        """
        cdf = self.cdf
        upper = partial_integral(cdf)
        lower = partial_integral(np.concatenate(([0.0], cdf[:-1])))
        return float(np.dot(self.support, upper - lower))


def quantile_from_density(grid, density, n_probs=DEFAULT_N_PROBS):
    """
        Builds the QuantileTable of a nonnegative function sampled on a grid.
    """
    grid = np.asarray(grid, dtype=float)
    density = np.asarray(density, dtype=float)

    if grid.shape != density.shape:
        raise ValueError("grid and density should have the same shape")

    if np.any(density < 0.0) or not np.all(np.isfinite(density)):
        raise ValueError("density should be finite and nonnegative")

    mass = float(np.sum(density))
    if not mass > 0.0:
        raise DegenerateSpectrumError("The spectrum has no mass, it can not be normalised")

    positive = density > 0.0
    support = grid[positive]
    weights = density[positive] / mass

    probs = np.linspace(0.0, 1.0, n_probs)
    table = QuantileTable(probs=probs, values=np.empty(0), support=support, weights=weights)
    values = table(probs)

    return QuantileTable(probs=probs, values=values, support=support, weights=weights)


def quantile_from_spectrum(s, n_probs=DEFAULT_N_PROBS):
    """
        Normalises a SpectralEstimate to unit mass and returns its quantile table.

        Supported Arguments
            s: (SpectralEstimate) Spectrum with positive total mass
            n_probs=1000: (Integer) Size of the tabulated probability grid
    """
    if not s.total_mass > 0.0:
        raise DegenerateSpectrumError("The spectrum has no mass, it can not be normalised")

    return quantile_from_density(s.freqs, s.psd, n_probs)
