"""
    Reference Gaussian process core: dense Gram matrices with Cholesky
    factors (torch, float64), synthetic sampling, the exact likelihood,
    KL quantities and maximum-likelihood refinement.
"""

from .gram import GramMatrix, gram_matrix, covariance_matrix, DEFAULT_CAP, JITTER_SCHEDULE
from .sampling import sample_gp, sample_even_gp, sample_times, EVEN, UNIFORM_RANDOM, SAMPLINGS
from .likelihood import nll, nkl, kl_divergence, expected_log_likelihood
from .refine import ml_refine, ml_bound_report, BoundReport, has_diverged
