import pytest

from gvmpy.estimators import (Bartlett, Covariance, CovarianceTransform, Periodogram,
                              Welch, bartlett, covariance_transform, empirical_covariance,
                              periodogram, welch)

# Possible values
windows = ["box", 1, False]
n_freqs = [1, 0, 2.5, "asd", True]
bounds = [(-0.1, None), (0.3, 0.2), (None, 0.0), (None, "asd")]


@pytest.mark.parametrize("window", windows)
def test_periodogram_should_throw_value_error_for_window(window):
    with pytest.raises(ValueError):
        Periodogram(window=window)


@pytest.mark.parametrize("n_freq", n_freqs)
def test_periodogram_should_throw_value_error_for_n_freqs(n_freq):
    with pytest.raises(ValueError):
        Periodogram(n_freqs=n_freq)


@pytest.mark.parametrize("fmin, fmax", bounds)
def test_periodogram_should_throw_value_error_for_grid(fmin, fmax):
    with pytest.raises(ValueError):
        Periodogram(fmin=fmin, fmax=fmax)


@pytest.mark.parametrize(
    "segments, window",
    [(segment, window) for segment in [0, -3, 1.5, "asd", True] for window in [None, "box"]]
)
def test_bartlett_should_throw_value_error(segments, window):
    with pytest.raises(ValueError):
        Bartlett(segments=segments, window=window)


@pytest.mark.parametrize("overlap", [-0.1, 0.95, "asd", True, None])
def test_welch_should_throw_value_error(overlap):
    with pytest.raises(ValueError):
        Welch(overlap=overlap)


@pytest.mark.parametrize("bin_width, max_lag", [(0.0, None), (-1.0, 10.0), ("asd", None),
                                                (None, -5.0), (None, False)])
def test_covariance_should_throw_value_error(bin_width, max_lag):
    with pytest.raises(ValueError):
        Covariance(bin_width=bin_width, max_lag=max_lag)

    with pytest.raises(ValueError):
        CovarianceTransform(bin_width=bin_width, max_lag=max_lag)


@pytest.mark.parametrize(
    "estimator, name, domain, function, keyword_arguments",
    [(Periodogram(window="hann"), "Periodogram", "spectral", periodogram,
      {'window': "hann", 'scaling': "density"}),
     (Bartlett(segments=8), "Bartlett", "spectral", bartlett,
      {'segments': 8, 'window': None}),
     (Welch(segments=6, overlap=0.25, window="hamming"), "Welch", "spectral", welch,
      {'segments': 6, 'overlap': 0.25, 'window': "hamming"}),
     (Covariance(bin_width=0.5), "Covariance", "temporal", empirical_covariance,
      {'bin_width': 0.5, 'max_lag': None}),
     (CovarianceTransform(max_lag=100.0), "CovarianceTransform", "spectral",
      covariance_transform, {'bin_width': None, 'max_lag': 100.0})]
)
def test_get_estimator_method(estimator, name, domain, function, keyword_arguments):
    details = estimator.get_estimator()

    assert isinstance(details, dict)
    assert details["name"] == name
    assert details["domain"] == domain
    assert details["estimator"] is function
    assert details["keyword_arguments"] == keyword_arguments


@pytest.mark.parametrize("estimator", [Periodogram(n_freqs=64, fmax=0.5),
                                       Bartlett(n_freqs=64, fmax=0.5),
                                       Welch(n_freqs=64, fmax=0.5),
                                       CovarianceTransform(n_freqs=64, fmax=0.5)])
def test_get_grid_method(estimator):
    assert estimator.get_grid() == {'n_freqs': 64, 'fmin': None, 'fmax': 0.5}
