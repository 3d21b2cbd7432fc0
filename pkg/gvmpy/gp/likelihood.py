"""Gaussian log-likelihood and Kullback-Leibler quantities"""

import numpy as np
import torch

from .gram import DEFAULT_CAP, GramMatrix, gram_matrix

LOG_2PI = float(np.log(2.0 * np.pi))


def observations(data):
    """
        (inputs, values) of a TimeSeries or of a PointCloudSeries.
    """
    inputs = getattr(data, "locations", None)
    if inputs is None:
        inputs = data.times

    return inputs, np.asarray(data.values, dtype=float)


def _as_gram(matrix):
    return matrix if isinstance(matrix, GramMatrix) else GramMatrix.from_matrix(matrix)


def nll(model, ts, cap=DEFAULT_CAP):
    """
        Negative log-likelihood of the observations under the zero-mean GP

            -l = 1/2 (y^T K^-1 y + log|K| + n log 2 pi)

        with the log-determinant read off the Cholesky diagonal.

        Supported Arguments
            model: (KernelModel) GP covariance, noise included
            ts: (TimeSeries or PointCloudSeries) Observations
            cap=16384: (Integer) Largest n accepted
    """
    inputs, values = observations(ts)
    gram = gram_matrix(model, inputs, cap)

    y = torch.as_tensor(values, dtype=torch.float64)
    quadratic = float(y @ gram.solve(values))
    return 0.5 * (quadratic + gram.logdet() + values.size * LOG_2PI)


def nkl(k0, k1):
    """
        Negative Kullback-Leibler divergence between N(0, K0) and N(0, K1),

            -1/2 (tr(K1^-1 K0) - n + log(|K1| / |K0|))

        always nonpositive and zero only when K0 = K1.

        Supported Arguments
            k0: (GramMatrix or Array) Covariance of the first Gaussian
            k1: (GramMatrix or Array) Covariance of the second Gaussian, same size
    """
    k0 = _as_gram(k0)
    k1 = _as_gram(k1)

    if k0.n != k1.n:
        raise ValueError("Both matrices should have the same size")

    trace = float(torch.trace(k1.solve(k0.matrix)))
    return -0.5 * (trace - k0.n + k1.logdet() - k0.logdet())


def kl_divergence(k0, k1):
    """
        D_KL(N(0, K0) || N(0, K1)), i.e. -nkl(K0, K1).
    """
    return -nkl(k0, k1)


def expected_log_likelihood(model, inputs, true_covariance, cap=DEFAULT_CAP):
    """
        Expectation of the log-likelihood of the model over data drawn from
        N(0, true_covariance),

            E l = -1/2 (n log 2 pi + log|K| + tr(K^-1 Kbar))

        Supported Arguments
            model: (KernelModel) Model whose likelihood is averaged
            inputs: (Array) Observation times or locations
            true_covariance: (GramMatrix or Array) Covariance Kbar of the data
    """
    gram = gram_matrix(model, inputs, cap)
    truth = true_covariance.matrix if isinstance(true_covariance, GramMatrix) \
        else torch.as_tensor(np.asarray(true_covariance, dtype=float), dtype=torch.float64)

    trace = float(torch.trace(gram.solve(truth)))
    return -0.5 * (gram.n * LOG_2PI + gram.logdet() + trace)
