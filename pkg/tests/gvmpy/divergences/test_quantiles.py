import numpy as np
import pytest

from gvmpy.divergences import quantile_from_density, quantile_from_spectrum
from gvmpy.estimators import SpectralEstimate
from gvmpy.exceptions import DegenerateSpectrumError


def test_point_mass_quantile_is_constant():
    grid = np.linspace(0.0, 0.1, 11)
    density = np.zeros(11)
    density[5] = 3.0

    table = quantile_from_density(grid, density)

    assert np.allclose(table.values, 0.05)
    assert table.mean() == pytest.approx(0.05)


def test_uniform_density_quantile_is_linear():
    grid = np.linspace(0.2, 0.4, 201)
    table = quantile_from_density(grid, np.ones(201))

    assert np.all(np.abs(table.values - (0.2 + table.probs * 0.2)) <= 0.001 + 1e-12)


def test_two_equal_bins():
    grid = np.linspace(0.0, 0.05, 6)
    density = np.array([0.0, 0.0, 1.0, 0.0, 1.0, 0.0])

    table = quantile_from_density(grid, density)

    assert np.allclose(table([0.1, 0.3, 0.49]), 0.02)
    assert np.allclose(table([0.51, 0.8, 1.0]), 0.04)
    assert table.second_moment() == pytest.approx(0.5 * 0.02 ** 2 + 0.5 * 0.04 ** 2)


def test_quantile_table_is_monotone():
    rng = np.random.default_rng(0)
    table = quantile_from_density(np.linspace(0.0, 1.0, 100), rng.uniform(size=100))

    assert np.all(np.diff(table.values) >= 0.0)
    assert table.probs.size == 1000


def test_integrate_against_partial_integral():
    grid = np.linspace(0.0, 1.0, 5)
    table = quantile_from_density(grid, np.array([1.0, 0.0, 2.0, 1.0, 0.0]))

    # q(p) = 1 gives the mean, q(p) = 2p gives the integral of 2 p Q(p)
    assert table.integrate_against(lambda p: p) == pytest.approx(table.mean())

    n = 200000
    probs = (np.arange(n) + 0.5) / n
    assert table.integrate_against(lambda p: p ** 2) == pytest.approx(
        np.mean(2.0 * probs * table(probs)), abs=1e-6)


def test_zero_mass_should_throw_degenerate_spectrum_error():
    with pytest.raises(DegenerateSpectrumError):
        quantile_from_density(np.linspace(0.0, 1.0, 5), np.zeros(5))

    with pytest.raises(DegenerateSpectrumError):
        quantile_from_spectrum(SpectralEstimate(np.linspace(0.0, 1.0, 5), np.zeros(5)))


@pytest.mark.parametrize("density", [[1.0, -1.0, 1.0], [1.0, np.nan, 1.0], [1.0, 1.0]])
def test_invalid_density_should_throw_value_error(density):
    with pytest.raises(ValueError):
        quantile_from_density(np.array([0.0, 0.5, 1.0]), np.array(density))
