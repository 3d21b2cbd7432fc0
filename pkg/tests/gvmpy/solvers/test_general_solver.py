import numpy as np
import pytest

from gvmpy.estimators import EmpiricalCovariance, SpectralEstimate, empirical_covariance, welch
from gvmpy.exceptions import InitializationError
from gvmpy.gp import sample_even_gp
from gvmpy.kernels import (ExpCos, IsotropicSE, KernelModel, Sinc, SpectralMixtureSE,
                           eval_kernel, eval_psd)
from gvmpy.solvers import FitConfig, default_init, fit_general, initialize_mixture


def exact_covariance(model, n_bins=101, bin_width=1.0):
    lags = np.arange(n_bins) * bin_width
    return EmpiricalCovariance(lags, eval_kernel(model, lags), np.ones(n_bins, dtype=int),
                               bin_width)


def exact_spectrum(model, freqs):
    return SpectralEstimate(freqs, eval_psd(model, freqs))


def test_spectral_l2_recovers_an_exact_psd():
    truth = np.array([1.0, 0.05, 0.01])
    s = exact_spectrum(KernelModel(ExpCos(), truth), np.linspace(0.0, 0.2, 401))
    cfg = FitConfig("freq:l2", ExpCos(), init=1.2 * truth)

    result = fit_general(s, cfg)

    assert np.allclose(result.theta_star, truth, rtol=1e-2)
    assert result.success and result.converged
    assert result.divergence == "freq:l2"
    assert result.optimizer == "nelder-mead"
    assert result.loss < 1e-8
    assert np.all(np.diff(result.history) <= 0.0)
    assert result.diagnostics["normalization"]["data"] == pytest.approx(s.total_mass)


def test_spectral_w2_rescales_the_magnitude():
    truth = np.array([2.0, 0.05, 0.01])
    s = exact_spectrum(KernelModel(ExpCos(), truth), np.linspace(0.0, 0.2, 2001))
    cfg = FitConfig("freq:w2", ExpCos(), init=[1.0, 0.055, 0.011])

    result = fit_general(s, cfg)

    assert result.theta_star[1] == pytest.approx(0.05, rel=1e-2)
    assert result.theta_star[2] == pytest.approx(0.01, rel=2e-2)
    assert result.theta_star[0] == pytest.approx(2.0, rel=2e-2)


def test_temporal_l2_recovers_kernel_and_noise():
    truth = np.array([1.0, 0.05, 0.02])
    cov = exact_covariance(KernelModel(ExpCos(), truth, noise_variance=1.0))
    cfg = FitConfig("time:l2", ExpCos(), init=1.05 * truth)

    result = fit_general(cov, cfg)

    assert np.allclose(result.theta_star, truth, rtol=2e-2)
    assert result.noise_variance == pytest.approx(1.0, abs=2e-2)
    assert abs(result.diagnostics["lag0_residual"]) < 1e-2
    assert result.diagnostics["noise_variance"] == result.noise_variance


def test_temporal_fit_without_noise():
    truth = np.array([1.0, 0.05, 0.02])
    cov = exact_covariance(KernelModel(ExpCos(), truth))
    cfg = FitConfig("time:l1", ExpCos(), init=1.02 * truth, fit_noise=False)

    result = fit_general(cov, cfg)

    assert result.noise_variance == 0.0
    assert np.allclose(result.theta_star, truth, rtol=2e-2)


def test_default_init_of_a_temporal_fit():
    truth = np.array([1.0, 0.05, 0.02])
    cov = exact_covariance(KernelModel(ExpCos(), truth, noise_variance=1.0))

    init = default_init(cov, ExpCos())

    assert init[1] == pytest.approx(0.05, rel=0.1)
    assert ExpCos().kernel(init, [0.0])[0] \
        == pytest.approx(cov.estimates[1], rel=1e-9)


def test_default_init_of_a_location_scale_family_is_the_exact_solution():
    s = exact_spectrum(KernelModel(Sinc(), [1.0, 0.1, 0.04]), np.linspace(0.0, 0.25, 2501))

    assert np.allclose(default_init(s, Sinc()), [1.0, 0.1, 0.04], rtol=1e-2)


def test_exact_optimizer_is_routed_to_the_closed_form():
    s = exact_spectrum(KernelModel(ExpCos(), [1.0, 0.05, 0.01]), np.linspace(0.0, 0.2, 2001))

    result = fit_general(s, FitConfig("freq:w2", ExpCos(), optimizer="exact"))

    assert result.iterations == 0
    assert result.optimizer == "exact"


def test_mixture_fit_finds_both_tones():
    truth = np.array([1.0, 0.1, 0.01, 0.5, 0.3, 0.02])
    family = SpectralMixtureSE(components=2)
    s = exact_spectrum(KernelModel(family, truth), np.linspace(0.0, 0.5, 501))

    result = fit_general(s, FitConfig("freq:l2", family, max_iters=4000))
    locations = np.sort(result.theta_star[1::3])

    assert np.allclose(locations, [0.1, 0.3], atol=2e-3)
    assert result.history[-1] < result.history[0]
    assert np.all(np.diff(result.history) <= 0.0)


@pytest.mark.parametrize("d", ["freq:l2", "freq:w2"])
def test_nelder_mead_and_powell_reach_the_same_loss(d):
    ts = sample_even_gp(KernelModel(ExpCos(), [100.0, 0.05, 0.015]), 2000, 500.0, seed=0)
    s = welch(ts, segments=4)

    losses = [fit_general(s, FitConfig(d, ExpCos(), optimizer=optimizer)).loss
              for optimizer in ("nelder-mead", "powell")]

    assert abs(losses[0] - losses[1]) <= 0.05 * max(losses)


@pytest.mark.slow
def test_temporal_fit_recovers_the_noise_variance():
    model = KernelModel(ExpCos(), [100.0, 0.05, 0.01], noise_variance=1.0)

    noises = []
    for seed in range(20):
        cov = empirical_covariance(sample_even_gp(model, 4000, 1000.0, seed=seed), max_lag=100.0)
        noises.append(fit_general(cov, FitConfig("time:l2", ExpCos())).noise_variance)

    assert np.mean(noises) == pytest.approx(1.0, rel=0.25)
    assert np.median(noises) == pytest.approx(1.0, rel=0.25)


def test_fit_general_should_throw_value_error_for_mismatched_data():
    cov = exact_covariance(KernelModel(ExpCos(), [1.0, 0.05, 0.02]))
    s = exact_spectrum(KernelModel(ExpCos(), [1.0, 0.05, 0.01]), np.linspace(0.0, 0.2, 201))

    with pytest.raises(ValueError):
        fit_general(cov, FitConfig("freq:l2", ExpCos()))

    with pytest.raises(ValueError):
        fit_general(s, FitConfig("time:l2", ExpCos()))

    with pytest.raises(ValueError):
        fit_general(cov, FitConfig("freq:w2", ExpCos(), optimizer="exact"))

    with pytest.raises(ValueError):
        fit_general([1.0, 2.0], FitConfig("time:l2", ExpCos()))


def test_isotropic_family_needs_a_covariance():
    s = exact_spectrum(KernelModel(ExpCos(), [1.0, 0.05, 0.01]), np.linspace(0.0, 0.2, 201))

    with pytest.raises(InitializationError):
        default_init(s, IsotropicSE(input_dim=2))


def test_initialize_mixture_single_tone():
    freqs = np.linspace(0.0, 0.5, 501)
    s = exact_spectrum(KernelModel(ExpCos(), [2.0, 0.1, 0.01]), freqs)

    theta = initialize_mixture(s, 1)

    assert theta[1] == pytest.approx(0.1, abs=1e-3)
    assert theta[2] == pytest.approx(0.01, rel=2e-2)
    assert theta[0] == pytest.approx(2.0, rel=2e-2)


def test_initialize_mixture_two_tones():
    freqs = np.linspace(0.0, 0.5, 501)
    family = SpectralMixtureSE(components=2)
    s = exact_spectrum(KernelModel(family, [1.0, 0.1, 0.01, 2.0, 0.3, 0.01]), freqs)

    theta = initialize_mixture(s, 2)

    # sorted by local mass, the larger tone first
    assert theta[1] == pytest.approx(0.3, abs=1e-3)
    assert theta[4] == pytest.approx(0.1, abs=1e-3)


def test_initialize_mixture_flat_spectrum():
    freqs = np.linspace(0.0, 0.5, 501)
    theta = initialize_mixture(SpectralEstimate(freqs, np.ones(501)), 3)

    assert np.allclose(theta[1::3], [0.5 / 6, 0.25, 2.5 / 6])
    assert np.allclose(theta[0::3], theta[0])


def test_initialize_mixture_fills_missing_components():
    freqs = np.linspace(0.0, 0.5, 501)
    s = exact_spectrum(KernelModel(ExpCos(), [1.0, 0.1, 0.01]), freqs)

    theta = initialize_mixture(s, 3)

    assert theta.size == 9
    assert theta[1] == pytest.approx(0.1, abs=1e-3)


@pytest.mark.parametrize("components", [0, -1, 1.5, "asd", True])
def test_initialize_mixture_should_throw_value_error(components):
    s = SpectralEstimate(np.linspace(0.0, 0.5, 11), np.ones(11))

    with pytest.raises(ValueError):
        initialize_mixture(s, components)


@pytest.mark.slow
def test_twenty_component_mixture_covers_the_tones():
    rng = np.random.default_rng(7)
    freqs = np.linspace(0.0, 0.5, 1001)
    tones = np.linspace(0.03, 0.47, 20)
    truth = np.column_stack([rng.uniform(0.5, 2.0, 20), tones, np.full(20, 0.004)]).ravel()
    family = SpectralMixtureSE(components=20)
    s = exact_spectrum(KernelModel(family, truth), freqs)

    result = fit_general(s, FitConfig("freq:l2", family, max_iters=5000))
    fitted = KernelModel(family, result.theta_star)
    psd = eval_psd(fitted, freqs)

    assert np.all(np.diff(result.history) <= 0.0)
    assert result.history[-1] < result.history[0]
    for tone in tones:
        window = np.abs(freqs - tone) <= 0.0005 + 1e-12
        assert np.max(psd[window]) >= 0.5 * np.max(psd[np.abs(freqs - tone) <= 0.01])
