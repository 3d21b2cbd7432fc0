"""Unit-location, unit-scale prototypes of the location-scale PSD families"""

import numpy as np
from scipy.special import ndtri

from ..exceptions import ParameterDomainError

GAUSSIAN_PROTOTYPE = "GaussianPrototype"
RECT_PROTOTYPE = "RectPrototype"
DIRAC_PROTOTYPE = "DiracPrototype"

PROTOTYPES = (GAUSSIAN_PROTOTYPE, RECT_PROTOTYPE, DIRAC_PROTOTYPE)

# Second moments of the unit-mass prototypes, i.e. the integral of Q01(p)^2 over [0, 1].
# exp(-x^2) normalises to N(0, 1/2) and rect(x) to U[-1/2, 1/2].
_SECOND_MOMENTS = {
    GAUSSIAN_PROTOTYPE: 0.5,
    RECT_PROTOTYPE: 1.0 / 12.0,
    DIRAC_PROTOTYPE: 0.0,
}


def validate_prototype_field(prototype_id):
    """
        A function that validates the prototype_id field
    """
    if prototype_id not in PROTOTYPES:
        raise ValueError("Please provide a valid prototype_id")


def _validate_probs(probs):
    probs = np.asarray(probs, dtype=float)

    if not np.all(np.isfinite(probs)) or np.any(probs < 0.0) or np.any(probs > 1.0):
        raise ParameterDomainError("Probabilities should lie in [0, 1]")

    return probs


def quantile_of_prototype(prototype_id, probs):
    """
        Quantile function Q01(p) of the unit-mass normalised prototype.

        The Gaussian prototype maps p=0 and p=1 to -inf and +inf, the
        rectangular one maps them to the support edges -1/2 and 1/2 and the
        Dirac prototype is identically 0.

        Supported Arguments
            prototype_id: (String) One of GaussianPrototype, RectPrototype, DiracPrototype
            probs: (Array) Probabilities in [0, 1]
    """
    validate_prototype_field(prototype_id)
    probs = _validate_probs(probs)

    if prototype_id == GAUSSIAN_PROTOTYPE:
        return ndtri(probs) / np.sqrt(2.0)

    if prototype_id == RECT_PROTOTYPE:
        return probs - 0.5

    return np.zeros_like(probs)


def prototype_partial_integral(prototype_id, probs):
    """
        Closed form of G(p), the integral of Q01 over [0, p].

        G(0) = G(1) = 0 for the three symmetric prototypes, and G lets the
        exact solver integrate Q(p) * Q01(p) without quadrature error when
        Q is piecewise constant.
    """
    validate_prototype_field(prototype_id)
    probs = _validate_probs(probs)

    if prototype_id == GAUSSIAN_PROTOTYPE:
        # d/dp [-phi(ndtri(p))] = ndtri(p), with phi the standard normal density
        z = ndtri(probs)
        with np.errstate(over="ignore", invalid="ignore"):
            density = np.exp(-0.5 * z ** 2) / np.sqrt(2.0 * np.pi)
        density = np.where(np.isfinite(z), density, 0.0)
        return -density / np.sqrt(2.0)

    if prototype_id == RECT_PROTOTYPE:
        return 0.5 * probs ** 2 - 0.5 * probs

    return np.zeros_like(probs)


def prototype_second_moment(prototype_id):
    """
        Integral of Q01(p)^2 over [0, 1], the variance of the unit-mass prototype.
    """
    validate_prototype_field(prototype_id)

    return _SECOND_MOMENTS[prototype_id]


def rect(x):
    """
        Rectangle function: 1 inside |x| < 1/2, 1/2 on the edges, 0 outside.
    """
    x = np.abs(np.asarray(x, dtype=float))

    return np.where(x < 0.5, 1.0, np.where(x == 0.5, 0.5, 0.0))


def grid_spacing(freqs):
    """
        Typical spacing of a frequency grid, 0 for grids with a single point.
    """
    unique = np.unique(np.asarray(freqs, dtype=float))

    if unique.size < 2:
        return 0.0

    return float(np.median(np.diff(unique)))


def dirac_on_grid(freqs, location, magnitude):
    """
        Discretised Dirac delta: all the mass goes to the grid point nearest
        to the location, as a density of height magnitude / spacing.
    """
    freqs = np.asarray(freqs, dtype=float)
    values = np.zeros_like(freqs)
    spacing = grid_spacing(freqs)

    if freqs.size == 0 or spacing == 0.0:
        return values

    distance = np.abs(freqs - location)
    nearest = int(np.argmin(distance))

    if distance[nearest] <= 0.5 * spacing:
        values.flat[nearest] = magnitude / spacing

    return values
