"""Observations of a field over R^d"""

from dataclasses import dataclass

import numpy as np
import torch

from ..exceptions import InsufficientDataError
from ..gp.gram import DEFAULT_CAP, gram_matrix

# Side of the hypercube [0, extent]^d point clouds are drawn from
DEFAULT_EXTENT = 10.0


@dataclass(frozen=True, eq=False)
class PointCloudSeries:
    """
        Values observed at n locations of R^d.

        Supported Arguments:
            locations: (Array) n x d matrix of input coordinates, a vector for d = 1
            values: (Array) n observed values
    """
    locations: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        locations = np.array(self.locations, dtype=float)
        if locations.ndim == 1:
            locations = locations.reshape(-1, 1)
        values = np.array(self.values, dtype=float).ravel()

        if locations.ndim != 2 or locations.shape[1] < 1:
            raise ValueError("locations should be an n x d matrix")

        if locations.shape[0] != values.size:
            raise ValueError("locations and values should have the same number of rows")

        if values.size < 2:
            raise InsufficientDataError("A point cloud needs at least 2 observations")

        if not (np.all(np.isfinite(locations)) and np.all(np.isfinite(values))):
            raise ValueError("locations and values should be finite")

        locations.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "locations", locations)
        object.__setattr__(self, "values", values)

    @property
    def n(self):
        return self.values.size

    @property
    def input_dim(self):
        return self.locations.shape[1]

    def centered(self):
        return PointCloudSeries(self.locations, self.values - np.mean(self.values))


# pylint: disable=too-many-arguments
def sample_point_cloud(model, n, input_dim=None, extent=DEFAULT_EXTENT, seed=0, cap=DEFAULT_CAP):
    """
        Draws n locations uniformly in [0, extent]^d and the GP at them.

        Supported Arguments
            model: (KernelModel) Isotropic covariance model, noise included
            n: (Integer) Number of observations
            input_dim=None: (Integer) d, defaults to the input_dim of the family
            extent=10.0: (Float) Side of the hypercube
            seed=0: (Integer) Seed of the torch generator
    """
    input_dim = getattr(model.family, "input_dim", 1) if input_dim is None else input_dim

    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError("Please provide a valid n")

    if not isinstance(input_dim, int) or input_dim < 1:
        raise ValueError("Please provide a valid input_dim")

    if not extent > 0.0:
        raise ValueError("Please provide a valid extent")

    generator = torch.Generator().manual_seed(seed)
    locations = (extent * torch.rand(n, input_dim, generator=generator,
                                     dtype=torch.float64)).numpy()

    gram = gram_matrix(model, locations, cap)
    noise = torch.randn(n, generator=generator, dtype=torch.float64)
    return PointCloudSeries(locations, (gram.cholesky @ noise).numpy())
