"""
    Isotropic multi-input path: point clouds over R^d, their radial
    empirical covariance and temporal-L2 fits of isotropic kernels.
"""

from .point_cloud import PointCloudSeries, sample_point_cloud, DEFAULT_EXTENT
from .functional import (radial_empirical_covariance, fit_isotropic, DEFAULT_BIN_WIDTH,
                         DEFAULT_MAX_RADIUS)
