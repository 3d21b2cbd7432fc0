"""GVM model: estimator, divergence and optimizer wired to a kernel family"""

import logging

from ..divergences import is_valid_divergence, spectral_loss, temporal_loss
from ..exceptions import GVMError
from ..gp import ml_refine, nll
from ..kernels import is_valid_family
from ..optimizer import NelderMead, is_valid_optimizer
from ..optimizer.utils import DEFAULT_MAX_ITERS, DEFAULT_TOLERANCE
from ..solvers import FitConfig, fit_general
from .gvm_helper import (build_statistic_from_ref_and_details, describe_estimator,
                         is_valid_estimator, print_fit_summary)

logger = logging.getLogger(__name__)


class GVM:
    """
        Generalised variogram model.

        A GVM fits a kernel family to a time series in three steps: the
        compiled estimator computes a statistic of the data (binned
        covariance or PSD), the divergence turns it into a loss over
        hyperparameters, and the optimizer minimises that loss.

            model = GVM(ExpCos())
            model.compile(estimator=Periodogram(), divergence=W2(), optimizer=Exact())
            result = model.fit(ts)

        Supported Arguments
            family: (KernelFamily) Family to fit
    """

    def __init__(self, family):
        if not is_valid_family(family):
            raise ValueError("Please provide a valid gvmpy kernel family")

        self.__family = family
        self.__estimator = None
        self.__config = None
        self.__statistic = None
        self.__result = None

    # pylint: disable=too-many-arguments
    def compile(self, estimator, divergence, optimizer=None, max_iters=DEFAULT_MAX_ITERS,
                tolerance=DEFAULT_TOLERANCE, fit_noise=True, seed=0):
        """
            Sets the estimator, the divergence and the optimizer of the model.

            Supported Arguments
                estimator: (Estimator) Covariance, Periodogram, Bartlett, Welch
                    or CovarianceTransform
                divergence: (Divergence or String) Temporal divergence for Covariance,
                    spectral divergence for the others
                optimizer=None: (Optimizer) Exact, NelderMead (default) or Powell
                max_iters=2000: (Integer) Iteration cap of the search
                tolerance=1e-8: (Float) Stopping tolerance
                fit_noise=True: (Bool) Fit a noise variance in temporal fits
                seed=0: (Integer) Seed recorded with the fit
        """
        if not is_valid_estimator(estimator):
            raise ValueError("Please provide a valid gvmpy estimator")

        optimizer = NelderMead() if optimizer is None else optimizer
        if not is_valid_optimizer(optimizer):
            raise ValueError("Please provide a valid gvmpy optimizer")

        config = FitConfig(divergence=divergence, family=self.__family, optimizer=optimizer,
                           max_iters=max_iters, tolerance=tolerance, seed=seed,
                           fit_noise=fit_noise)

        if not is_valid_divergence(config.divergence) or \
                config.divergence.get_divergence()['domain'] != \
                estimator.get_estimator()['domain']:
            raise ValueError("The divergence does not match the domain of the estimator")

        self.__estimator = estimator
        self.__config = config

    def __check_compiled(self):
        if self.__config is None:
            raise ValueError("You need to compile the model first")

    def __check_fitted(self):
        if self.__result is None:
            raise ValueError("You need to fit the model first")

    def estimate(self, ts):
        """
            Runs the compiled estimator on a time series.
        """
        self.__check_compiled()
        return build_statistic_from_ref_and_details(self.__estimator, ts)

    def fit(self, ts, init=None):
        """
            Estimates the statistic of the series and fits the family to it.

            Supported Arguments
                ts: (TimeSeries) Observations
                init=None: (Array) Initial frequency-domain theta
        """
        self.__check_compiled()

        config = self.__config
        if init is not None:
            config = FitConfig(divergence=config.divergence, family=config.family,
                               optimizer=config.optimizer, max_iters=config.max_iters,
                               tolerance=config.tolerance, init=init, seed=config.seed,
                               fit_noise=config.fit_noise)

        self.__statistic = self.estimate(ts)
        self.__result = fit_general(self.__statistic, config)
        self.__result.diagnostics['estimator'] = describe_estimator(self.__estimator)

        logger.info("Fitted %s under %s in %.4fs", self.__family.family_id,
                    self.__result.divergence, self.__result.elapsed)
        return self.__result

    def evaluate(self, ts=None):
        """
            Loss of the fitted model on the statistic of `ts`, or on the
            statistic it was fitted to, plus its nll when a series is given.
        """
        self.__check_fitted()
        model = self.__result.model
        statistic = self.__statistic if ts is None else self.estimate(ts)

        if self.__config.divergence.get_divergence()['domain'] == "temporal":
            loss = temporal_loss(model, statistic, self.__config.divergence)
        else:
            loss = spectral_loss(model, statistic, self.__config.divergence)

        metrics = {'loss': loss, 'divergence': self.__config.divergence_id}
        if ts is not None:
            try:
                metrics['nll'] = nll(model, ts)
            except (GVMError, ValueError) as ex:
                logger.warning("Skipping the nll: %s", ex)

        return metrics

    def refine(self, ts, max_iters=500):
        """
            Maximum-likelihood refinement started from the GVM estimate.
        """
        self.__check_fitted()
        return ml_refine(self.__result.model, ts, max_iters=max_iters,
                         fit_noise=self.__result.noise_variance > 0.0)

    def summary(self):
        """
            Prints the configuration and, once fitted, the estimate.
        """
        self.__check_compiled()

        print("Family:", repr(self.__family))
        print("Estimator:", describe_estimator(self.__estimator))
        print("Divergence:", self.__config.divergence_id)
        print("Optimizer:", self.__config.optimizer_name)

        if self.__result is not None:
            print_fit_summary(self.__result)

    def get_result(self):
        return self.__result

    def get_statistic(self):
        return self.__statistic

    def get_model(self):
        """
            The fitted KernelModel.
        """
        self.__check_fitted()
        return self.__result.model
