"""Divergences between two nonnegative functions sampled on a common grid"""

import numpy as np
from scipy.integrate import trapezoid

from ..exceptions import ParameterDomainError
from .quantiles import quantile_from_density

# Relative floor applied to the second argument of KL and IS
DEFAULT_FLOOR = 1e-12


def _as_grid_functions(a, b, grid):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    grid = np.asarray(grid, dtype=float)

    if not a.shape == b.shape == grid.shape or a.ndim != 1:
        raise ValueError("a, b and grid should be 1-d arrays of the same length")

    return a, b, grid


def l1(a, b, grid):
    """
        Integral of |a - b| (trapezoidal rule).
    """
    a, b, grid = _as_grid_functions(a, b, grid)
    return float(trapezoid(np.abs(a - b), grid))


def l2(a, b, grid):
    """
        Integral of (a - b)^2 (trapezoidal rule). This is the squared L2 distance.
    """
    a, b, grid = _as_grid_functions(a, b, grid)
    return float(trapezoid((a - b) ** 2, grid))


def wasserstein_tables(table_a, table_b, order):
    """
        Integral of |Q_a(p) - Q_b(p)|^order over [0, 1] between two quantile
        tables, computed exactly on the union of their CDF breakpoints.
    """
    breaks = np.union1d(table_a.cdf, table_b.cdf)
    widths = np.diff(np.concatenate(([0.0], breaks)))

    gap = np.abs(table_a(breaks) - table_b(breaks))
    return float(np.dot(widths, gap ** order))


def w1(a, b, grid):
    """
        1-Wasserstein distance between a and b normalised to unit mass.
    """
    a, b, grid = _as_grid_functions(a, b, grid)
    return wasserstein_tables(quantile_from_density(grid, a), quantile_from_density(grid, b), 1)


def w2(a, b, grid):
    """
        Squared 2-Wasserstein distance between a and b normalised to unit
        mass, i.e. the integral of (Q_a - Q_b)^2 over [0, 1].
    """
    a, b, grid = _as_grid_functions(a, b, grid)
    return wasserstein_tables(quantile_from_density(grid, a), quantile_from_density(grid, b), 2)


def _floored(values, floor):
    if floor is None or floor <= 0.0:
        return values

    return np.maximum(values, floor * np.max(values)) if np.max(values) > 0.0 else values


def _check_support(a, b):
    if np.any((a > 0.0) & (b <= 0.0)):
        raise ParameterDomainError("The support of the first argument is not contained "
                                   "in the support of the second one")


def kl(a, b, grid, floor=DEFAULT_FLOOR):
    """
        Generalised Kullback-Leibler divergence
        integral of a log(a / b) - a + b, which is the usual KL when a and b
        both have unit mass and stays nonnegative otherwise.

        b is floored at floor * max(b) so that supp(a) is contained in supp(b);
        with floor=None a support violation raises ParameterDomainError.
    """
    a, b, grid = _as_grid_functions(a, b, grid)
    b = _floored(b, floor)
    _check_support(a, b)

    with np.errstate(divide="ignore", invalid="ignore"):
        integrand = np.where(a > 0.0, a * np.log(a / b), 0.0) - a + b

    return float(max(trapezoid(integrand, grid), 0.0))


def itakura_saito(a, b, grid, floor=DEFAULT_FLOOR):
    """
        Itakura-Saito divergence, integral of a / b - log(a / b) - 1.

        Both arguments are floored at floor * their maximum, since zero bins
        in either one make the integrand infinite; with floor=None a support
        violation raises ParameterDomainError.
    """
    a, b, grid = _as_grid_functions(a, b, grid)
    a = _floored(a, floor)
    b = _floored(b, floor)
    _check_support(a, b)

    positive = (a > 0.0) & (b > 0.0)
    if floor is None and np.any(~positive & ((a > 0.0) | (b > 0.0))):
        raise ParameterDomainError("Itakura-Saito needs both arguments to share their support")

    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(positive, a / b, 1.0)

    return float(max(trapezoid(ratio - np.log(ratio) - 1.0, grid), 0.0))
