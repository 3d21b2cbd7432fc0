"""Utility functions shared by the divergence classes"""

TEMPORAL_DOMAIN = "temporal"
SPECTRAL_DOMAIN = "spectral"

DIVERGENCE_DOMAINS = (TEMPORAL_DOMAIN, SPECTRAL_DOMAIN)

# Prefixes of the string ids, e.g. "time:l2" or "freq:w2"
DOMAIN_PREFIXES = {
    TEMPORAL_DOMAIN: "time",
    SPECTRAL_DOMAIN: "freq",
}

# Divergences that only make sense between densities on a frequency grid
SPECTRAL_ONLY = ("w1", "w2", "kl", "is")


def validate_domain_field(domain, name):
    """
        A function that validates the domain field of a divergence
    """
    if domain not in DIVERGENCE_DOMAINS:
        raise ValueError("Please provide a valid domain")

    if domain == TEMPORAL_DOMAIN and name in SPECTRAL_ONLY:
        raise ValueError(f"Please provide a valid domain, {name} is only defined for spectra")


def validate_floor_field(floor):
    """
        A function that validates the floor field, None disables the floor
    """
    if floor is None:
        return

    if isinstance(floor, bool) or not isinstance(floor, (int, float)) or not 0.0 < floor < 1.0:
        raise ValueError("Please provide a valid floor")


def divergence_id(name, domain):
    """
        Stable string id of a divergence, e.g. "freq:w2"
    """
    return f"{DOMAIN_PREFIXES[domain]}:{name}"


def get_divergence_details(name, domain, divergence, keyword_arguments):
    """
        Creates the details dict returned by the divergence classes
    """
    return {
        'name': name,
        'id': divergence_id(name, domain),
        'domain': domain,
        'divergence': divergence,
        'keyword_arguments': keyword_arguments
    }


def is_valid_divergence(divergence):
    """
        Checks that an object behaves like a gvmpy divergence
    """
    if not divergence:
        return False

    try:
        details = divergence.get_divergence()

        if not isinstance(details, dict):
            return False

        if details["domain"] not in DIVERGENCE_DOMAINS:
            return False

        if not callable(details["divergence"]):
            return False

        if not isinstance(details["keyword_arguments"], dict):
            return False

        return True

    except AttributeError:
        return False
    except KeyError:
        return False
