import numpy as np
import pytest

from gvmpy.cli import ExperimentConfig, SyntheticSpec
from gvmpy.cli.config import build_estimator, build_priors, build_synthetic
from gvmpy.estimators import Covariance, Welch
from gvmpy.exceptions import ConfigError
from gvmpy.kernels import ExpCos, IsotropicSE

SYNTHETIC = {'family': "ExpCos", 'theta': [100.0, 0.05, 0.01], 'n': 200, 'span': 199.0}
ESTIMATOR = {'method': "periodogram"}
FIT = {'divergence': "freq:w2", 'family': "ExpCos", 'optimizer': "exact"}


def test_build_synthetic():
    spec = build_synthetic(dict(SYNTHETIC, noise_variance=0.1, sampling="uniform-random"))

    assert isinstance(spec, SyntheticSpec)
    assert spec.n == 200
    assert spec.span == 199.0
    assert spec.sampling == "uniform-random"
    assert spec.model.noise_variance == 0.1
    assert not spec.is_point_cloud
    assert spec.with_n(50).n == 50
    assert spec.with_n(50).model is spec.model


def test_build_synthetic_point_cloud():
    spec = build_synthetic({'family': "IsotropicSE", 'family_options': {'input_dim': 2},
                            'theta': [5.0, 1.0], 'domain': "time", 'noise_variance': 1.0,
                            'n': 50})

    assert spec.is_point_cloud
    assert spec.model.family == IsotropicSE(input_dim=2)
    assert spec.model.domain == "time"
    assert list(spec.model.theta) == [5.0, 1.0]


@pytest.mark.parametrize(
    argnames="details",
    argvalues=[
        None,
        [],
        {'theta': [1.0, 0.1, 0.1]},
        {'family': "ExpCos"},
        {'family': "Unknown", 'theta': [1.0, 0.1, 0.1]},
        {'family': "ExpCos", 'theta': [1.0, 0.1]},
        {'family': "ExpCos", 'theta': [-1.0, 0.1, 0.1]},
        dict(SYNTHETIC, n=1),
        dict(SYNTHETIC, n=2.5),
        dict(SYNTHETIC, span=0),
        dict(SYNTHETIC, extent=-1.0),
        dict(SYNTHETIC, sampling="grid"),
        dict(SYNTHETIC, colour="red"),
        dict(SYNTHETIC, family_options={'components': 2}),
    ]
)
def test_build_synthetic_should_throw_config_error(details):
    with pytest.raises(ConfigError):
        build_synthetic(details)


def test_build_estimator():
    assert isinstance(build_estimator({'method': "welch", 'segments': 3}), Welch)
    assert isinstance(build_estimator({'method': "covariance", 'max_lag': 5.0}), Covariance)


@pytest.mark.parametrize(
    argnames="details",
    argvalues=[
        None,
        {},
        {'method': "lomb-scargle"},
        {'method': "welch", 'segments': 0},
        {'method': "periodogram", 'colour': "red"},
    ]
)
def test_build_estimator_should_throw_config_error(details):
    with pytest.raises(ConfigError):
        build_estimator(details)


def test_build_priors():
    priors = build_priors({'magnitude': 1, 'location': [0.01, 0.1], 'scale': 0.02}, ExpCos())

    assert priors == {'magnitude': (1.0, 1.0), 'location': (0.01, 0.1), 'scale': (0.02, 0.02)}


@pytest.mark.parametrize(
    argnames="details",
    argvalues=[
        None,
        {'magnitude': 1, 'location': 0.1},
        {'magnitude': 1, 'location': 0.1, 'scale': 0.1, 'gamma': 2},
        {'magnitude': 1, 'location': [0.2, 0.1], 'scale': 0.1},
        {'magnitude': 1, 'location': [0.1], 'scale': 0.1},
        {'magnitude': -1, 'location': 0.1, 'scale': 0.1},
        {'magnitude': True, 'location': 0.1, 'scale': 0.1},
        {'magnitude': "1", 'location': 0.1, 'scale': 0.1},
    ]
)
def test_build_priors_should_throw_config_error(details):
    with pytest.raises(ConfigError):
        build_priors(details, ExpCos())


def test_fit_config_from_dict():
    config = ExperimentConfig.from_dict("fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR,
                                                'fit': FIT, 'seed': 4, 'out_dir': "runs"})

    assert config.seed == 4
    assert config.out_dir == "runs"
    assert config.fit.optimizer_name == "exact"
    assert config.fit.family == ExpCos()
    assert config.get("refine_ml", False) is False
    assert config.radial == (0.25, 10.0)


def test_seed_and_out_dir_overrides():
    config = ExperimentConfig.from_dict("sample", {'synthetic': SYNTHETIC, 'seed': 4}, seed=9,
                                        out_dir="elsewhere")

    assert config.seed == 9
    assert config.out_dir == "elsewhere"


def test_point_cloud_fit_needs_no_estimator():
    config = ExperimentConfig.from_dict("fit", {
        'synthetic': {'family': "IsotropicSE", 'family_options': {'input_dim': 2},
                      'theta': [5.0, 1.0], 'domain': "time", 'n': 50},
        'fit': {'divergence': "time:l2", 'family': "IsotropicSE",
                'family_options': {'input_dim': 2}},
        'radial': {'bin_width': 0.5, 'max_radius': 4.0},
    })

    assert config.estimator is None
    assert config.radial == (0.5, 4.0)


def test_recovery_config_draws_from_the_priors():
    config = ExperimentConfig.from_dict("recover", {
        'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT, 'runs': 3,
        'priors': {'magnitude': 100.0, 'location': [0.04, 0.06], 'scale': 0.01},
    })

    theta = config.draw_theta(np.random.default_rng(0))

    assert theta[0] == 100.0
    assert 0.04 <= theta[1] <= 0.06
    assert theta[2] == 0.01


@pytest.mark.parametrize(
    argnames="command, details",
    argvalues=[
        ("predict", {'synthetic': SYNTHETIC}),
        ("fit", None),
        ("fit", {'estimator': ESTIMATOR, 'fit': FIT}),
        ("fit", {'input': "series.csv", 'synthetic': SYNTHETIC, 'estimator': ESTIMATOR,
                 'fit': FIT}),
        ("fit", {'input': 3, 'estimator': ESTIMATOR, 'fit': FIT}),
        ("fit", {'synthetic': SYNTHETIC, 'fit': FIT}),
        ("fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR}),
        ("fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR,
                 'fit': dict(FIT, divergence="freq:unknown")}),
        ("fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT, 'seed': "1"}),
        ("fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT,
                 'refine_ml': "yes"}),
        ("fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT,
                 'ml_max_iters': 0}),
        ("fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT,
                 'radial': {'width': 1.0}}),
        ("fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT, 'runs': 3}),
        ("sample", {}),
        ("sample", {'synthetic': SYNTHETIC, 'output': 1}),
        ("estimate", {'synthetic': SYNTHETIC}),
        ("benchmark", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT}),
        ("benchmark", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT,
                       'n_values': []}),
        ("benchmark", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT,
                       'n_values': [100, 1]}),
        ("recover", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT, 'runs': 0,
                     'priors': {'magnitude': 1, 'location': 0.1, 'scale': 0.1}}),
        ("recover", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT, 'runs': 2}),
        ("recover", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR,
                     'fit': dict(FIT, family="Sinc"), 'runs': 2,
                     'priors': {'magnitude': 1, 'location': 0.1, 'scale': 0.1}}),
    ]
)
def test_experiment_config_should_throw_config_error(command, details):
    with pytest.raises(ConfigError):
        ExperimentConfig.from_dict(command, details)
