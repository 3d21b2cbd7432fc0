import json

import numpy as np
import pandas as pd
import pytest

from gvmpy.cli import build_parser, main
from gvmpy.cli.commands import summarise_recovery

SYNTHETIC = {'family': "ExpCos", 'theta': [100.0, 0.05, 0.01], 'n': 200, 'span': 199.0,
             'noise_variance': 0.01}
ESTIMATOR = {'method': "periodogram"}
FIT = {'divergence': "freq:w2", 'family': "ExpCos", 'optimizer': "exact"}


def write_config(tmp_path, details, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(details), encoding="utf-8")
    return str(path)


def run_command(tmp_path, command, details, *extra, out_dir="out"):
    config = write_config(tmp_path, details)
    return main([command, "--config", config, "--out-dir", str(tmp_path / out_dir), *extra])


def read_result(tmp_path, out_dir="out", name="result.json"):
    return json.loads((tmp_path / out_dir / name).read_text(encoding="utf-8"))


def without_timings(details):
    if isinstance(details, dict):
        return {key: without_timings(value) for key, value in details.items()
                if key not in ("elapsed", "history")}
    if isinstance(details, list):
        return [without_timings(value) for value in details]
    return details


def test_parser_requires_a_command_and_a_config():
    parser = build_parser()

    with pytest.raises(SystemExit):
        parser.parse_args([])

    with pytest.raises(SystemExit):
        parser.parse_args(["fit"])

    with pytest.raises(SystemExit):
        parser.parse_args(["sample", "--config", "c.json", "--refine-ml"])

    args = parser.parse_args(["fit", "--config", "c.json", "--seed", "3", "--refine-ml"])
    assert args.command == "fit"
    assert args.seed == 3
    assert args.refine_ml


def test_fit_writes_the_result_and_the_plot_data(tmp_path):
    code = run_command(tmp_path, "fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR,
                                         'fit': FIT})

    assert code == 0
    result = read_result(tmp_path)
    assert result['command'] == "fit"
    assert result['success']
    assert result['family'] == "ExpCos"
    assert result['parameters'] == ["magnitude", "location", "scale"]
    assert len(result['theta_star']) == 3
    assert 0.035 < result['theta_star'][1] < 0.065
    assert result['diagnostics']['estimator']['name'] == "Periodogram"

    plot = pd.read_csv(tmp_path / "out" / "psd_fit.csv")
    assert list(plot.columns) == ["freq", "empirical", "fitted"]
    assert len(plot) > 0


def test_fit_with_ml_refinement(tmp_path):
    details = {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT, 'ml_max_iters': 10}

    assert run_command(tmp_path, "fit", details, "--refine-ml") == 0

    result = read_result(tmp_path)
    assert result['gvm_theta'] == result['theta_star']
    assert len(result['ml_theta']) == 3
    assert result['ml_nll'] <= result['gvm_nll'] + 1e-6
    assert result['ml']['divergence'] == "nll"


def test_fit_is_deterministic_for_a_seed(tmp_path):
    details = {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR,
               'fit': {'divergence': "freq:l2", 'family': "ExpCos", 'max_iters': 200}}

    assert run_command(tmp_path, "fit", details, "--seed", "5", out_dir="first") == 0
    assert run_command(tmp_path, "fit", details, "--seed", "5", out_dir="second") == 0
    assert run_command(tmp_path, "fit", details, "--seed", "6", out_dir="third") == 0

    first = without_timings(read_result(tmp_path, "first"))
    assert first == without_timings(read_result(tmp_path, "second"))
    assert first != without_timings(read_result(tmp_path, "third"))


def test_fit_of_a_csv_series_with_a_covariance_estimator(tmp_path):
    times = np.arange(300.0)
    values = np.cos(2.0 * np.pi * 0.05 * times) + 0.1 * np.random.default_rng(0).normal(size=300)
    pd.DataFrame({'time': times, 'value': values}).to_csv(tmp_path / "series.csv", index=False)
    details = {'input': str(tmp_path / "series.csv"),
               'estimator': {'method': "covariance", 'max_lag': 40.0},
               'fit': {'divergence': "time:l2", 'family': "ExpCos"}, 'plots': False}

    assert run_command(tmp_path, "fit", details) == 0

    result = read_result(tmp_path)
    assert result['divergence'] == "time:l2"
    assert 'lag0_residual' in result['diagnostics']
    assert not (tmp_path / "out" / "cov_fit.csv").exists()


def test_fit_of_a_point_cloud(tmp_path):
    details = {
        'synthetic': {'family': "IsotropicSE", 'family_options': {'input_dim': 2},
                      'theta': [5.0, 1.0], 'domain': "time", 'noise_variance': 1.0,
                      'n': 120},
        'fit': {'divergence': "time:l2", 'family': "IsotropicSE",
                'family_options': {'input_dim': 2}},
        'radial': {'bin_width': 0.5, 'max_radius': 5.0},
    }

    assert run_command(tmp_path, "fit", details) == 0

    result = read_result(tmp_path)
    assert result['time_parameters'] == ["variance", "lengthscale"]
    assert 'radius0_offset' in result['diagnostics']
    plot = pd.read_csv(tmp_path / "out" / "cov_fit.csv")
    assert list(plot.columns) == ["lag", "empirical", "fitted"]


def test_sample_writes_a_series_and_honours_the_seed(tmp_path):
    details = {'synthetic': dict(SYNTHETIC, sampling="uniform-random")}

    assert run_command(tmp_path, "sample", details, "--seed", "1", out_dir="a") == 0
    assert run_command(tmp_path, "sample", details, "--seed", "1", out_dir="b") == 0
    assert run_command(tmp_path, "sample", details, "--seed", "2", out_dir="c") == 0

    first = pd.read_csv(tmp_path / "a" / "series.csv")
    assert list(first.columns) == ["time", "value"]
    assert len(first) == 200
    assert first['time'].is_monotonic_increasing
    assert first.equals(pd.read_csv(tmp_path / "b" / "series.csv"))
    assert not first.equals(pd.read_csv(tmp_path / "c" / "series.csv"))


def test_sample_writes_a_point_cloud(tmp_path):
    details = {'synthetic': {'family': "IsotropicSE", 'family_options': {'input_dim': 3},
                             'theta': [1.0, 2.0], 'domain': "time", 'noise_variance': 0.1,
                             'n': 40, 'extent': 5.0},
               'output': "cloud.csv"}

    assert run_command(tmp_path, "sample", details) == 0

    frame = pd.read_csv(tmp_path / "out" / "cloud.csv")
    assert list(frame.columns) == ["x1", "x2", "x3", "value"]
    assert len(frame) == 40
    assert frame[["x1", "x2", "x3"]].to_numpy().max() <= 5.0


def test_estimate_writes_the_spectrum_and_its_diagnostics(tmp_path):
    details = {'synthetic': SYNTHETIC, 'estimator': {'method': "welch", 'segments': 2,
                                                     'n_freqs': 64}}

    assert run_command(tmp_path, "estimate", details) == 0

    frame = pd.read_csv(tmp_path / "out" / "psd.csv")
    assert list(frame.columns) == ["freq", "psd"]
    assert len(frame) == 64
    assert (frame['psd'] >= 0.0).all()
    sidecar = read_result(tmp_path, name="psd.json")
    assert sidecar['onesided'] is True


def test_estimate_writes_the_covariance(tmp_path):
    details = {'synthetic': SYNTHETIC, 'estimator': {'method': "covariance", 'max_lag': 10.0}}

    assert run_command(tmp_path, "estimate", details) == 0

    frame = pd.read_csv(tmp_path / "out" / "cov.csv")
    assert list(frame.columns) == ["lag", "estimate", "count"]
    assert list(frame['lag']) == pytest.approx(list(range(11)))
    assert frame['count'][0] == 200


def test_benchmark_skips_the_likelihood_above_the_cap(tmp_path):
    details = {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT,
               'n_values': [64, 128], 'ml_cap': 64, 'ml_max_iters': 3}

    assert run_command(tmp_path, "benchmark", details) == 0

    frame = pd.read_csv(tmp_path / "out" / "benchmark.csv")
    assert list(frame['n']) == [64, 128]
    assert list(frame['ml_status']) == ["ok", "skipped"]
    assert (frame['gvm_elapsed'] > 0.0).all()
    assert np.isnan(frame['ml_elapsed'][1])


def test_recovery_study_writes_the_summary_and_the_runs(tmp_path):
    details = {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT, 'runs': 3,
               'priors': {'magnitude': 100.0, 'location': [0.04, 0.06], 'scale': 0.01},
               'runs_output': "runs.csv"}

    assert run_command(tmp_path, "recover", details) == 0

    summary = pd.read_csv(tmp_path / "out" / "recovery.csv")
    assert list(summary['parameter']) == ["magnitude", "location", "scale"]
    assert list(summary['runs']) == [3, 3, 3]
    runs = pd.read_csv(tmp_path / "out" / "runs.csv")
    assert list(runs['seed']) == [0, 1, 2]
    assert list(runs['true_magnitude']) == [100.0, 100.0, 100.0]


def test_summarise_recovery_ignores_failed_runs():
    rows = [
        {'status': "ok", 'pre_location': 1.0},
        {'status': "ok", 'pre_location': 3.0},
        {'status': "failed"},
    ]

    summary = summarise_recovery(rows, ["location"])

    assert summary == [{'parameter': "location", 'mean_pre': 2.0, 'std_pre': 1.0, 'runs': 3,
                        'failures': 1}]


@pytest.mark.parametrize(
    argnames="command, details",
    argvalues=[
        ("fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR,
                 'fit': dict(FIT, divergence="freq:hellinger")}),
        ("fit", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT, 'extra': 1}),
        ("benchmark", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT,
                       'n_values': []}),
        ("recover", {'synthetic': SYNTHETIC, 'estimator': ESTIMATOR, 'fit': FIT, 'runs': 0,
                     'priors': {'magnitude': 1, 'location': 0.1, 'scale': 0.1}}),
        ("sample", {'synthetic': dict(SYNTHETIC, theta=[1.0, 0.1])}),
    ]
)
def test_schema_errors_exit_with_1(tmp_path, command, details):
    assert run_command(tmp_path, command, details) == 1


def test_invalid_json_exits_with_1(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json", encoding="utf-8")

    assert main(["fit", "--config", str(path)]) == 1


def test_missing_config_exits_with_2(tmp_path):
    assert main(["fit", "--config", str(tmp_path / "missing.json")]) == 2


@pytest.mark.parametrize(
    argnames="content",
    argvalues=[None, "time,value\n0,1\n1,oops\n"]
)
def test_unreadable_input_exits_with_2(tmp_path, content):
    if content is not None:
        (tmp_path / "series.csv").write_text(content, encoding="utf-8")
    details = {'input': str(tmp_path / "series.csv"), 'estimator': ESTIMATOR, 'fit': FIT}

    assert run_command(tmp_path, "fit", details) == 2


def test_numerical_failure_exits_with_3(tmp_path):
    pd.DataFrame({'time': np.arange(50.0), 'value': np.sin(np.arange(50.0))}).to_csv(
        tmp_path / "series.csv", index=False)
    details = {'input': str(tmp_path / "series.csv"),
               'estimator': {'method': "covariance", 'bin_width': 1.0, 'max_lag': 0.4},
               'fit': {'divergence': "time:l2", 'family': "ExpCos"}}

    assert run_command(tmp_path, "fit", details) == 3
