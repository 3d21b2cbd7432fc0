"""
    The GVM model, which chains an estimator, a divergence and an
    optimizer into a single fit.
"""

from .gvm import GVM
from .gvm_helper import is_valid_estimator, build_statistic_from_ref_and_details
