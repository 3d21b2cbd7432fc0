"""Radial empirical covariance and isotropic fits"""

import numpy as np
from scipy.spatial.distance import cdist

from ..estimators import EmpiricalCovariance
from ..exceptions import InsufficientDataError
from ..kernels import IsotropicSE, eval_kernel
from ..solvers import FitConfig, fit_general

# Radial binning used for the isotropic fits
DEFAULT_BIN_WIDTH = 0.25
DEFAULT_MAX_RADIUS = 10.0

# Rows of the distance matrix computed at once
_ROW_BLOCK = 256


def radial_empirical_covariance(pc, bin_width=DEFAULT_BIN_WIDTH, max_radius=None, center=True):
    """
        Binned empirical covariance over Euclidean distances.

        Same binning as gvmpy.estimators.empirical_covariance with the lag
        replaced by ||t_i - t_j||: the radius-0 bin only holds the n
        diagonal pairs, every other pair at distance r <= max_radius goes to
        bin max(1, round(r / bin_width)), and empty bins are dropped.

        Supported Arguments
            pc: (PointCloudSeries) Observations
            bin_width=0.25: (Float) Radial bin width
            max_radius=None: (Float) Largest distance, defaults to the largest pairwise one
            center=True: (Boolean) Subtract the sample mean first
    """
    if isinstance(bin_width, bool) or not isinstance(bin_width, (int, float)) \
            or not bin_width > 0.0:
        raise ValueError("Please provide a valid bin_width")

    locations = pc.locations
    values = pc.values - np.mean(pc.values) if center else np.asarray(pc.values)
    n = pc.n

    blocks = []
    for start in range(0, n - 1, _ROW_BLOCK):
        stop = min(start + _ROW_BLOCK, n - 1)
        distances = cdist(locations[start:stop], locations)
        rows, cols = np.nonzero(np.arange(n)[None, :] > np.arange(start, stop)[:, None])
        blocks.append((distances[rows, cols], values[start + rows] * values[cols]))

    radii = np.concatenate([block[0] for block in blocks])
    products = np.concatenate([block[1] for block in blocks])

    max_radius = float(radii.max()) if max_radius is None else float(max_radius)
    if not max_radius > 0.0:
        raise ValueError("Please provide a valid max_radius")

    n_bins = int(np.rint(max_radius / bin_width)) + 1
    keep = radii <= max_radius
    index = np.maximum(1, np.rint(radii[keep] / bin_width).astype(np.int64))

    sums = np.bincount(index, weights=products[keep], minlength=n_bins)[:n_bins]
    counts = np.bincount(index, minlength=n_bins)[:n_bins]
    sums[0] = np.dot(values, values)
    counts[0] = n

    occupied = counts > 0
    if np.count_nonzero(occupied) < 2:
        raise InsufficientDataError("Fewer than 2 non-empty radial bins, try a wider max_radius")

    return EmpiricalCovariance(
        lag_centers=np.flatnonzero(occupied) * float(bin_width),
        estimates=sums[occupied] / counts[occupied],
        counts=counts[occupied],
        bin_width=float(bin_width),
    )


def fit_isotropic(pc, family=None, cfg=None, bin_width=DEFAULT_BIN_WIDTH,
                  max_radius=DEFAULT_MAX_RADIUS):
    """
        Fits an IsotropicSE kernel and a noise variance to a point cloud with
        the temporal L2 loss over radial bins. The noise is what the model
        needs on top of the kernel in the radius-0 bin.

        Supported Arguments
            pc: (PointCloudSeries) Observations
            family=None: (IsotropicSE) Defaults to IsotropicSE(input_dim=d)
            cfg=None: (FitConfig) Defaults to time:l2 with Nelder-Mead
            bin_width=0.25: (Float) Radial bin width
            max_radius=10.0: (Float) Largest distance considered
    """
    if cfg is not None:
        family = cfg.family
    family = IsotropicSE(input_dim=pc.input_dim) if family is None else family

    if not isinstance(family, IsotropicSE) or family.input_dim != pc.input_dim:
        raise ValueError("Please provide an IsotropicSE family matching the input dimension")

    if cfg is None:
        cfg = FitConfig(divergence="time:l2", family=family)

    cov = radial_empirical_covariance(pc, bin_width, max_radius)
    result = fit_general(cov, cfg)

    model = result.model
    result.diagnostics['radius0_offset'] = float(
        cov.estimates[0] - eval_kernel(model.replace(noise_variance=0.0), np.zeros(1))[0])
    result.diagnostics['bins'] = len(cov)
    return result
