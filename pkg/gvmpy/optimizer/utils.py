"""Utility functions shared by the optimizers"""

EXACT = "exact"
NELDER_MEAD = "nelder-mead"
POWELL = "powell"

OPTIMIZERS = (EXACT, NELDER_MEAD, POWELL)

# Defaults of FitConfig
DEFAULT_MAX_ITERS = 2000
DEFAULT_TOLERANCE = 1e-8


def validate_max_iters_field(max_iters):
    """
        A function that validates the max_iters field
    """
    if not isinstance(max_iters, int) or isinstance(max_iters, bool) or max_iters < 1:
        raise ValueError("Please provide a valid max_iters")


def validate_tolerance_field(tolerance):
    """
        A function that validates the tolerance field
    """
    if isinstance(tolerance, bool) or not isinstance(tolerance, (int, float)) \
            or not tolerance > 0.0:
        raise ValueError("Please provide a valid tolerance")


def is_valid_optimizer(optimizer):
    """
        Checks that an object behaves like a gvmpy optimizer
    """
    if not optimizer:
        return False

    try:
        details = optimizer.get_optimizer()

        if not isinstance(details, dict):
            return False

        if details["optimizer"] not in OPTIMIZERS:
            return False

        return isinstance(details["keyword_arguments"], dict)

    except AttributeError:
        return False
    except KeyError:
        return False
