"""Gram matrices of stationary kernels and their Cholesky factors"""

import logging
from dataclasses import dataclass

import numpy as np
import torch
from scipy.spatial.distance import cdist

from ..exceptions import ConditioningError
from ..kernels import eval_kernel

logger = logging.getLogger(__name__)

# Largest number of observations a dense Gram matrix is built for
DEFAULT_CAP = 16384

# Jitter added to the diagonal, relative to its mean, tried in this order
JITTER_SCHEDULE = (0.0, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6)


def as_inputs(inputs):
    """
        Inputs as an (n, d) float array: times become a single column.
    """
    inputs = np.asarray(inputs, dtype=float)
    return inputs.reshape(-1, 1) if inputs.ndim == 1 else inputs


def check_size(n, cap=DEFAULT_CAP):
    """
        A function that validates the number of observations against the cap
    """
    if n > cap:
        raise ValueError(f"Please provide at most {cap} observations, got {n}")


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """
        A symmetric positive definite covariance matrix together with its
        lower Cholesky factor and the jitter that had to be added for the
        factorisation to succeed.
    """
    matrix: torch.Tensor
    cholesky: torch.Tensor
    jitter: float = 0.0

    @classmethod
    def from_matrix(cls, matrix):
        """
            Factorises a given covariance matrix with the jitter schedule.
        """
        matrix = torch.as_tensor(np.asarray(matrix, dtype=float), dtype=torch.float64)

        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("Please provide a square matrix")

        matrix = 0.5 * (matrix + matrix.T)
        scale = float(torch.mean(torch.diagonal(matrix)).abs())
        eye = torch.eye(matrix.shape[0], dtype=torch.float64)

        for relative in JITTER_SCHEDULE:
            jitter = relative * scale
            factor, info = torch.linalg.cholesky_ex(matrix + jitter * eye)

            if int(info) == 0:
                if jitter > 0.0:
                    logger.info("Cholesky needed a jitter of %.3g (%.0e of the mean diagonal)",
                                jitter, relative)
                return cls(matrix + jitter * eye, factor, jitter)

            logger.debug("Cholesky failed with a relative jitter of %.0e", relative)

        raise ConditioningError("The Gram matrix is not positive definite even with jitter "
                                f"{JITTER_SCHEDULE[-1]:.0e} times its mean diagonal")

    @property
    def n(self):
        return self.matrix.shape[0]

    def logdet(self):
        return float(2.0 * torch.sum(torch.log(torch.diagonal(self.cholesky))))

    def solve(self, rhs):
        """
            K^-1 rhs through the Cholesky factor.
        """
        rhs = torch.as_tensor(np.asarray(rhs, dtype=float), dtype=torch.float64)
        column = rhs.ndim == 1
        result = torch.cholesky_solve(rhs.reshape(self.n, -1), self.cholesky)
        return result.reshape(-1) if column else result

    def inverse(self):
        return torch.cholesky_inverse(self.cholesky)

    def numpy(self):
        return self.matrix.numpy()


def covariance_matrix(model, inputs):
    """
        Dense matrix [K(t_i - t_j)] of the model plus its noise variance on
        the diagonal; multi-dimensional inputs use Euclidean distances.
    """
    inputs = as_inputs(inputs)
    distances = cdist(inputs, inputs)

    matrix = eval_kernel(model.replace(noise_variance=0.0), distances)
    matrix[np.diag_indices_from(matrix)] += model.noise_variance
    return matrix


def gram_matrix(model, inputs, cap=DEFAULT_CAP):
    """
        Builds and factorises the Gram matrix of a model at the given inputs.

        Supported Arguments
            model: (KernelModel) Covariance model, noise included
            inputs: (Array) n times, or an (n, d) array of locations
            cap=16384: (Integer) Largest n accepted
    """
    inputs = as_inputs(inputs)
    check_size(inputs.shape[0], cap)

    return GramMatrix.from_matrix(covariance_matrix(model, inputs))
