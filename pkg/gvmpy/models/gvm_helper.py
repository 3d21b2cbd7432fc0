"""Helpers of the GVM model: validation of its parts and running the estimator"""

from ..estimators import frequency_grid

ESTIMATOR_DOMAINS = ("temporal", "spectral")


def is_valid_estimator(estimator):
    """
        Checks that an object behaves like a gvmpy estimator
    """
    # If the estimator is None returning False
    if not estimator:
        return False

    try:
        # Calling the get_estimator method to get the details of the estimator
        details = estimator.get_estimator()

        # Checking the details, it should return a dict
        if not isinstance(details, dict):
            return False

        # Checking the domain, it should be temporal or spectral
        if details["domain"] not in ESTIMATOR_DOMAINS:
            return False

        # Checking the estimator function
        if not callable(details["estimator"]):
            return False

        # Checking the keyword_arguments, it should be a dict
        if not isinstance(details["keyword_arguments"], dict):
            return False

        # spectral estimators also describe their frequency grid
        if details["domain"] == "spectral" and not isinstance(estimator.get_grid(), dict):
            return False

        # All good
        return True

    # If the estimator has no get_estimator or get_grid method, then returning False
    except AttributeError:
        return False
    # If the details dict does not contain a key that it is supposed to have
    except KeyError:
        return False


def build_statistic_from_ref_and_details(estimator_ref, ts):
    """
        Runs an estimator on a time series: the binned covariance for
        temporal estimators, a PSD on the configured grid for spectral ones.
    """
    # Getting the function and its arguments from the estimator
    details = estimator_ref.get_estimator()
    estimator_func = details["estimator"]
    estimator_arguments = details["keyword_arguments"]

    # Temporal estimators need only the time series
    if details["domain"] == "temporal":
        return estimator_func(ts, **estimator_arguments)

    # Building the frequency grid for the spectral estimators
    freqs = frequency_grid(ts, **estimator_ref.get_grid())
    return estimator_func(ts, freqs, **estimator_arguments)


def describe_estimator(estimator_ref):
    """
        Name and settings of an estimator, for summaries and result files.
    """
    details = estimator_ref.get_estimator()
    description = {
        "name": details["name"],
        "domain": details["domain"],
        "keyword_arguments": dict(details["keyword_arguments"]),
    }

    # Adding the grid for the spectral estimators
    if details["domain"] == "spectral":
        description["grid"] = estimator_ref.get_grid()

    return description


def print_fit_summary(result):
    """
        Prints the fitted parameters of a FitResult.
    """
    print(f"Divergence: {result.divergence} - Optimizer: {result.optimizer} "
          f"- Loss: {result.loss:.6g} - Elapsed: {result.elapsed:.4f}s")

    # Failed fits have no parameters to print
    if result.theta_star is None:
        print("The fit failed:", result.diagnostics.get("failure", "unknown reason"))
        return

    # Printing the parameters one per line
    for name, value in zip(result.family.parameter_names(), result.theta_star):
        print(f"    {name}: {value:.6g}")

    if result.noise_variance > 0.0:
        print(f"    noise_variance: {result.noise_variance:.6g}")
