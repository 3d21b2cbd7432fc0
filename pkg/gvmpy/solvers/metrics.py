"""Recovery metrics of fitted hyperparameters"""

import numpy as np


def percentage_relative_error(truth, estimate):
    """
        PRE = 100 |truth - estimate| / truth, per parameter; NaN where the truth is 0.
    """
    truth = np.asarray(truth, dtype=float)
    estimate = np.asarray(estimate, dtype=float)

    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(truth != 0.0, 100.0 * np.abs(truth - estimate) / np.abs(truth), np.nan)


def relative_mean_absolute_error(truth, estimate):
    """
        Mean over the parameters of |truth - estimate| / |truth|.
    """
    return float(np.nanmean(percentage_relative_error(truth, estimate)) / 100.0)
