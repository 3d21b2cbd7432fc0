"""Base class shared by the stationary kernel families"""

import numpy as np

from ..exceptions import ParameterDomainError

FREQUENCY_DOMAIN = "frequency"
TIME_DOMAIN = "time"

DOMAINS = (FREQUENCY_DOMAIN, TIME_DOMAIN)


def validate_domain_field(domain):
    """
        A function that validates the domain field of a parameter vector
    """
    if domain not in DOMAINS:
        raise ValueError("Please provide a valid domain")


class KernelFamily:
    """
        A parametric family of stationary kernels and their PSDs.

        A family knows its theta layout in both domains, evaluates the PSD
        and the covariance from frequency-domain parameters, and maps
        parameters between the frequency and the time domain component by
        component. Subclasses fill in the class attributes and the
        per-component functions.

        Supported Arguments:
            component_count=1: (Integer) Number of components, 1 for non-mixtures
    """
    family_id = None
    prototype_id = None
    location_scale = False

    # Per-component parameter names, frequency domain first
    frequency_parameters = ("magnitude", "location", "scale")
    time_parameters = ("variance", "location", "scale")

    # Indices (inside a component) of parameters that must be strictly positive
    # and of those that must be nonnegative
    positive_parameters = (2,)
    nonnegative_parameters = (0, 1)

    def __init__(self, component_count=1):
        if not isinstance(component_count, int) or isinstance(component_count, bool) \
                or component_count < 1:
            raise ValueError("Please provide a valid component_count")

        self.__component_count = component_count

    @property
    def component_count(self):
        return self.__component_count

    @property
    def parameters_per_component(self):
        return len(self.frequency_parameters)

    @property
    def n_params(self):
        return self.parameters_per_component * self.__component_count

    def parameter_names(self, domain=FREQUENCY_DOMAIN):
        """
            Flat list of parameter names, `<name>_<component>` for mixtures.
        """
        validate_domain_field(domain)
        names = self.frequency_parameters if domain == FREQUENCY_DOMAIN else self.time_parameters

        if self.__component_count == 1:
            return list(names)

        return [f"{name}_{index + 1}" for index in range(self.__component_count) for name in names]

    def split(self, theta):
        """
            Reshapes a flat theta into a (component_count, parameters_per_component) array.
        """
        return np.asarray(theta, dtype=float).reshape(self.__component_count,
                                                      self.parameters_per_component)

    def validate_theta(self, theta):
        """
            Checks the size and the sign constraints of a theta vector and
            returns it as a read-only float array.
        """
        theta = np.array(theta, dtype=float).ravel()

        if theta.size != self.n_params:
            raise ParameterDomainError(
                f"{self.family_id} expects {self.n_params} parameters, got {theta.size}")

        if not np.all(np.isfinite(theta)):
            raise ParameterDomainError("Hyperparameters should be finite")

        components = self.split(theta)

        if np.any(components[:, list(self.positive_parameters)] <= 0.0):
            raise ParameterDomainError("Scale parameters should be strictly positive")

        if np.any(components[:, list(self.nonnegative_parameters)] < 0.0):
            raise ParameterDomainError("Magnitudes and locations should be nonnegative")

        theta.setflags(write=False)
        return theta

    def psd(self, theta, freqs):
        """
            PSD of the family at the given frequencies, from frequency-domain theta.
        """
        freqs = np.asarray(freqs, dtype=float)
        values = np.zeros_like(freqs)

        for component in self.split(theta):
            values = values + self.component_psd(freqs, *component)

        return values

    def kernel(self, theta, lags):
        """
            Covariance of the family at the given lags, from frequency-domain theta.
        """
        lags = np.asarray(lags, dtype=float)
        values = np.zeros_like(lags)

        for component in self.split(theta):
            values = values + self.component_kernel(lags, *component)

        return values

    def to_time(self, theta):
        """
            Maps frequency-domain theta to time-domain theta.
        """
        return np.concatenate([self.component_to_time(*component)
                               for component in self.split(theta)])

    def to_frequency(self, theta):
        """
            Maps time-domain theta to frequency-domain theta.
        """
        return np.concatenate([self.component_to_frequency(*component)
                               for component in self.split(theta)])

    def component_psd(self, freqs, *component):
        raise NotImplementedError

    def component_kernel(self, lags, *component):
        raise NotImplementedError

    def component_to_time(self, *component):
        raise NotImplementedError

    def component_to_frequency(self, *component):
        raise NotImplementedError

    def get_family(self):
        """
            Returns the details of the family as a dict.

            This method is used by the gvmpy models and solvers, there is
            no need to call it directly.
        """
        return {
            'family_id': self.family_id,
            'component_count': self.__component_count,
            'prototype_id': self.prototype_id,
            'location_scale': self.location_scale,
            'parameters': self.parameter_names(FREQUENCY_DOMAIN),
            'keyword_arguments': self.keyword_arguments()
        }

    def keyword_arguments(self):
        """
            Constructor arguments needed to rebuild the family.
        """
        return {}

    def __eq__(self, other):
        return isinstance(other, KernelFamily) and other.get_family() == self.get_family()

    def __hash__(self):
        return hash((self.family_id, self.__component_count))

    def __repr__(self):
        if self.__component_count == 1:
            return f"{type(self).__name__}()"
        return f"{type(self).__name__}(components={self.__component_count})"
