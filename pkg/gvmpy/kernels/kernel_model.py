"""KernelModel: a kernel family together with its hyperparameters"""

import numpy as np

from ..exceptions import ParameterDomainError
from .base import FREQUENCY_DOMAIN, TIME_DOMAIN, KernelFamily, validate_domain_field
from .cosine import Cosine
from .exp_cos import ExpCos
from .isotropic_se import IsotropicSE
from .sinc import Sinc
from .spectral_mixture import SpectralMixtureRect, SpectralMixtureSE

FAMILIES = {
    'ExpCos': ExpCos,
    'Sinc': Sinc,
    'Cosine': Cosine,
    'SpectralMixtureSE': SpectralMixtureSE,
    'SpectralMixtureRect': SpectralMixtureRect,
    'IsotropicSE': IsotropicSE,
}


def is_valid_family(family):
    """
        Checks that an object behaves like a gvmpy kernel family
    """
    if not family:
        return False

    try:
        details = family.get_family()

        if not isinstance(details, dict):
            return False

        if details["family_id"] not in FAMILIES:
            return False

        if not isinstance(details["component_count"], int) or details["component_count"] < 1:
            return False

        if not isinstance(details["keyword_arguments"], dict):
            return False

        return isinstance(family, KernelFamily)

    except AttributeError:
        return False
    except KeyError:
        return False


def family_from_id(family_id, **keyword_arguments):
    """
        Builds a family instance from its id, e.g. family_from_id("SpectralMixtureSE", components=3)
    """
    if family_id not in FAMILIES:
        raise ValueError("Please provide a valid family")

    return FAMILIES[family_id](**keyword_arguments)


class KernelModel:
    """
        An immutable (family, theta, noise variance) triple.

        theta is stored in the domain it was given in; `frequency_theta`
        always returns the frequency-domain layout (magnitude, location,
        scale per component) used for evaluation. The white-noise variance
        only enters the covariance at lag 0.

        Supported Arguments:
            family: (KernelFamily) One of the gvmpy.kernels families
            theta: (Array) Hyperparameters in the layout of the family
            noise_variance=0.0: (Float) Variance of the additive white noise
            domain="frequency": (String) "frequency" or "time", the layout of theta
    """

    def __init__(self, family, theta, noise_variance=0.0, domain=FREQUENCY_DOMAIN):
        if not is_valid_family(family):
            raise ValueError("Please provide a valid kernel family")

        validate_domain_field(domain)

        noise_variance = float(noise_variance)
        if not np.isfinite(noise_variance) or noise_variance < 0.0:
            raise ParameterDomainError("noise_variance should be a nonnegative number")

        self.__family = family
        self.__domain = domain
        self.__theta = family.validate_theta(theta)
        self.__noise_variance = noise_variance

        if domain == TIME_DOMAIN:
            self.__frequency_theta = family.validate_theta(family.to_frequency(self.__theta))
        else:
            self.__frequency_theta = self.__theta

    @property
    def family(self):
        return self.__family

    @property
    def theta(self):
        return self.__theta

    @property
    def frequency_theta(self):
        return self.__frequency_theta

    @property
    def noise_variance(self):
        return self.__noise_variance

    @property
    def domain(self):
        return self.__domain

    def replace(self, theta=None, noise_variance=None):
        """
            Returns a copy with new theta (same domain) and/or noise variance.
        """
        return KernelModel(self.__family,
                           self.__theta if theta is None else theta,
                           self.__noise_variance if noise_variance is None else noise_variance,
                           self.__domain)

    def components(self):
        """
            Frequency-domain parameters as a list of dicts, one per component.
        """
        names = self.__family.frequency_parameters
        return [dict(zip(names, (float(value) for value in component)))
                for component in self.__family.split(self.__frequency_theta)]

    def to_dict(self):
        """
            JSON-ready representation, always with frequency-domain parameters.
        """
        details = {
            'family': self.__family.family_id,
            'components': self.components(),
            'noise_variance': self.__noise_variance,
        }
        if isinstance(self.__family, IsotropicSE):
            details['input_dim'] = self.__family.input_dim
        return details

    @classmethod
    def from_dict(cls, details):
        """
            Inverse of `to_dict`.
        """
        try:
            family_id = details["family"]
            components = details["components"]
        except (KeyError, TypeError) as ex:
            raise ValueError("Please provide a valid kernel description") from ex

        if not isinstance(components, list) or not components:
            raise ValueError("Please provide a valid components list")

        keyword_arguments = {}
        if family_id in ('SpectralMixtureSE', 'SpectralMixtureRect'):
            keyword_arguments['components'] = len(components)
        if family_id == 'IsotropicSE':
            keyword_arguments['input_dim'] = int(details.get('input_dim', 1))

        family = family_from_id(family_id, **keyword_arguments)

        try:
            theta = [float(component[name]) for component in components
                     for name in family.frequency_parameters]
        except (KeyError, TypeError) as ex:
            raise ValueError("Please provide a valid components list") from ex

        return cls(family, theta, details.get('noise_variance', 0.0), FREQUENCY_DOMAIN)

    def __eq__(self, other):
        return isinstance(other, KernelModel) and other.family == self.__family \
            and other.domain == self.__domain \
            and np.array_equal(other.theta, self.__theta) \
            and other.noise_variance == self.__noise_variance

    def __hash__(self):
        return hash((self.__family, self.__domain, self.__theta.tobytes(), self.__noise_variance))

    def __repr__(self):
        return (f"KernelModel({self.__family!r}, theta={self.__theta.tolist()}, "
                f"noise_variance={self.__noise_variance}, domain={self.__domain!r})")
