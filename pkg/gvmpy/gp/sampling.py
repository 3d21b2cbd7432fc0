"""Synthetic observations of Gaussian processes"""

import logging

import numpy as np
import torch

from ..estimators import TimeSeries
from ..kernels import eval_kernel
from .gram import DEFAULT_CAP, gram_matrix

logger = logging.getLogger(__name__)

EVEN = "even"
UNIFORM_RANDOM = "uniform-random"

SAMPLINGS = (EVEN, UNIFORM_RANDOM)


def sample_times(n, span, sampling=EVEN, seed=0):
    """
        n observation times on [0, span]: evenly spaced, or sorted uniform
        draws for "uniform-random".
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError("Please provide a valid n")

    if not span > 0.0:
        raise ValueError("Please provide a valid span")

    if sampling == EVEN:
        return np.linspace(0.0, float(span), n)

    if sampling == UNIFORM_RANDOM:
        generator = torch.Generator().manual_seed(seed)
        times = torch.sort(torch.rand(n, generator=generator, dtype=torch.float64)).values
        times = times.numpy() * float(span)
        if np.any(np.diff(times) <= 0.0):
            raise ValueError("Random sampling produced repeated times, use another seed")
        return times

    raise ValueError("Please provide a valid sampling")


def draw(gram, seed):
    """
        One draw of N(0, K) as L z with z standard normal from a seeded generator.
    """
    generator = torch.Generator().manual_seed(seed)
    noise = torch.randn(gram.n, generator=generator, dtype=torch.float64)
    return (gram.cholesky @ noise).numpy()


def sample_gp(model, times, seed=0, cap=DEFAULT_CAP):
    """
        Draws the GP at the given times.

        Supported Arguments
            model: (KernelModel) GP covariance, noise included
            times: (Array) Strictly increasing times
            seed=0: (Integer) Seed of the torch generator
            cap=16384: (Integer) Largest n accepted
    """
    times = np.asarray(times, dtype=float)
    return TimeSeries(times, draw(gram_matrix(model, times, cap), seed))


# Circulant embeddings tried, as multiples of the 2 (n - 1) minimal size
_EMBEDDING_FACTORS = (1, 2, 4, 8)

# Negative circulant eigenvalues tolerated, relative to the largest one
_EIGEN_TOLERANCE = 1e-8


def sample_even_gp(model, n, span, seed=0):
    """
        Draws the GP at n evenly spaced times on [0, span] by circulant
        embedding of the covariance (O(n log n)); exact whenever the
        embedding is nonnegative definite. The embedding is enlarged up to
        8 times before falling back to the Cholesky sampler.

        Supported Arguments
            model: (KernelModel) GP covariance, noise included
            n: (Integer) Number of observations
            span: (Float) Length of the observation window
            seed=0: (Integer) Seed of the torch generator
    """
    times = sample_times(n, span, EVEN)
    step = times[1] - times[0]

    for factor in _EMBEDDING_FACTORS:
        size = 2 * (n - 1) * factor
        half = size // 2
        row = eval_kernel(model, np.arange(half + 1) * step)
        circulant = np.concatenate((row, row[-2:0:-1]))
        eigenvalues = np.fft.fft(circulant).real

        if eigenvalues.min() >= -_EIGEN_TOLERANCE * eigenvalues.max():
            generator = torch.Generator().manual_seed(seed)
            normal = torch.randn(2, size, generator=generator, dtype=torch.float64).numpy()
            weights = np.sqrt(np.clip(eigenvalues, 0.0, None) / size)
            field = np.fft.fft(weights * (normal[0] + 1j * normal[1]))
            return TimeSeries(times, field.real[:n])

    logger.info("Circulant embedding is not nonnegative definite, sampling with Cholesky")
    return sample_gp(model, times, seed)
