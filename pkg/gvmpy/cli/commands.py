"""The fit, sample, estimate, benchmark and recover commands"""

import logging
import time
from multiprocessing import Pool

import numpy as np

from ..estimators import EmpiricalCovariance
from ..exceptions import GVMError
from ..gp import UNIFORM_RANDOM, ml_refine, nll, sample_even_gp, sample_gp, sample_times
from ..kernels import IsotropicSE, KernelModel, eval_kernel, eval_psd
from ..models import GVM, build_statistic_from_ref_and_details
from ..multiinput import fit_isotropic, radial_empirical_covariance, sample_point_cloud
from ..solvers import percentage_relative_error
from . import io

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NUMERIC = 3

# Largest n the benchmark runs the full-GP likelihood for, unless configured
DEFAULT_ML_CAP = 4000


def generate(spec, seed):
    """
        Draws synthetic data: a point cloud for IsotropicSE, otherwise a
        time series (circulant embedding for even sampling).
    """
    if spec.is_point_cloud:
        return sample_point_cloud(spec.model, spec.n, extent=spec.extent, seed=seed)

    if spec.sampling == UNIFORM_RANDOM:
        return sample_gp(spec.model, sample_times(spec.n, spec.span, UNIFORM_RANDOM, seed),
                         seed)

    return sample_even_gp(spec.model, spec.n, spec.span, seed)


def load_data(config, point_cloud):
    if config.synthetic is not None:
        return generate(config.synthetic, config.seed)

    path = config.get("input")
    return io.read_point_cloud_csv(path) if point_cloud else io.read_series_csv(path)


def compile_model(config):
    """
        A GVM compiled with the estimator and the fit settings of a config.
    """
    cfg = config.fit
    model = GVM(cfg.family)
    model.compile(config.estimator, cfg.divergence, cfg.optimizer, cfg.max_iters,
                  cfg.tolerance, cfg.fit_noise, config.seed)
    return model


def write_fit_plots(statistic, fitted_model, out_dir):
    """
        Writes cov_fit.csv or psd_fit.csv with the grid, the data statistic
        and the fitted model.
    """
    if isinstance(statistic, EmpiricalCovariance):
        path = io.output_path(out_dir, "cov_fit.csv")
        io.write_fit_csv("lag", statistic.lag_centers, statistic.estimates,
                         eval_kernel(fitted_model, statistic.lag_centers), path)
    else:
        path = io.output_path(out_dir, "psd_fit.csv")
        io.write_fit_csv("freq", statistic.freqs, statistic.psd,
                         eval_psd(fitted_model, statistic.freqs,
                                  symmetric=not statistic.onesided), path)
    return path


def cmd_fit(config, refine_ml=False):
    """
        Estimator, solver and optional ML refinement; writes the result JSON
        and the plot CSVs.
    """
    point_cloud = isinstance(config.fit.family, IsotropicSE)
    data = load_data(config, point_cloud)

    if point_cloud:
        bin_width, max_radius = config.radial
        result = fit_isotropic(data, cfg=config.fit, bin_width=bin_width, max_radius=max_radius)
        statistic = radial_empirical_covariance(data, bin_width, max_radius)
    else:
        model = compile_model(config)
        result = model.fit(data, init=config.fit.init)
        statistic = model.get_statistic()

    output = result.to_dict()
    output['command'] = "fit"
    output['seed'] = config.seed

    if result.success and config.get("plots", True):
        write_fit_plots(statistic, result.model, config.out_dir)

    if result.success and (refine_ml or config.get("refine_ml", False)):
        refined = ml_refine(result.model, data, max_iters=config.get("ml_max_iters", 500),
                            fit_noise=result.noise_variance > 0.0)
        output['gvm_theta'] = result.theta_star
        output['gvm_nll'] = nll(result.model, data)
        output['ml_theta'] = refined.theta_star
        output['ml_nll'] = refined.loss
        output['ml'] = refined.to_dict()

    io.write_json(output, io.output_path(config.out_dir, config.get("output", "result.json")))

    if not result.success:
        logger.error("The fit failed: %s", result.diagnostics.get("failure"))
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_sample(config):
    """
        Writes a synthetic series (time,value) or point cloud (x1..xd,value) CSV.
    """
    data = generate(config.synthetic, config.seed)

    if config.synthetic.is_point_cloud:
        path = io.output_path(config.out_dir, config.get("output", "points.csv"))
        io.write_point_cloud_csv(data, path)
    else:
        path = io.output_path(config.out_dir, config.get("output", "series.csv"))
        io.write_series_csv(data, path)

    logger.info("Wrote %d observations to %s", data.values.size, path)
    return EXIT_OK


def cmd_estimate(config):
    """
        Runs the estimator only and writes the covariance or PSD CSV.
    """
    data = load_data(config, False)
    statistic = build_statistic_from_ref_and_details(config.estimator, data)

    if isinstance(statistic, EmpiricalCovariance):
        path = io.output_path(config.out_dir, config.get("output", "cov.csv"))
        io.write_covariance_csv(statistic, path)
    else:
        path = io.output_path(config.out_dir, config.get("output", "psd.csv"))
        io.write_spectrum_csv(statistic, path)
        io.write_json({'onesided': statistic.onesided, 'diagnostics': statistic.diagnostics},
                      path[:-len(".csv")] + ".json" if path.endswith(".csv") else path + ".json")
    return EXIT_OK


def cmd_benchmark(config):
    """
        Times the GVM fit for every n, and the full-GP likelihood refinement
        while n stays under ml_cap; the other ML cells are marked skipped.
    """
    ml_cap = config.get("ml_cap", DEFAULT_ML_CAP)
    ml_max_iters = config.get("ml_max_iters", 20)
    repeats = config.get("repeats", 1)

    rows = []
    for n in config.get("n_values"):
        data = generate(config.synthetic.with_n(n), config.seed)
        model = compile_model(config)

        elapsed = []
        for _ in range(repeats):
            start = time.perf_counter()
            result = model.fit(data)
            elapsed.append(time.perf_counter() - start)

        row = {'n': n, 'gvm_elapsed': min(elapsed), 'gvm_loss': result.loss,
               'ml_elapsed': np.nan, 'ml_evaluations': 0, 'ml_elapsed_per_evaluation': np.nan,
               'ml_status': "skipped"}

        if n <= ml_cap and result.success:
            start = time.perf_counter()
            refined = ml_refine(result.model, data, max_iters=ml_max_iters)
            row['ml_elapsed'] = time.perf_counter() - start
            row['ml_evaluations'] = refined.diagnostics['evaluations']
            row['ml_elapsed_per_evaluation'] = row['ml_elapsed'] / max(row['ml_evaluations'], 1)
            row['ml_status'] = "ok"
        else:
            logger.info("Skipping the ML benchmark at n=%d (cap %d)", n, ml_cap)

        rows.append(row)

    io.write_table_csv(rows, io.output_path(config.out_dir,
                                            config.get("output", "benchmark.csv")))
    return EXIT_OK


def recovery_run(arguments):
    """
        One sample, estimate and fit of a recovery study. Failures are
        returned as rows with status "failed", never raised.
    """
    config, run = arguments
    seed = config.seed + run
    names = list(config.priors)

    generator = np.random.default_rng(seed)
    truth = config.draw_theta(generator)
    row = {'run': run, 'seed': seed, 'status': "ok"}
    row.update({f"true_{name}": value for name, value in zip(names, truth)})

    try:
        model = KernelModel(config.synthetic.model.family, truth,
                            config.synthetic.model.noise_variance)
        data = generate(config.synthetic.with_model(model), seed)
        result = compile_model(config).fit(data)

        if not result.success:
            raise GVMError(result.diagnostics.get("failure", "fit failed"))

        errors = percentage_relative_error(truth, result.theta_star)
        row.update({f"fit_{name}": value for name, value in zip(names, result.theta_star)})
        row.update({f"pre_{name}": value for name, value in zip(names, errors)})
        row['elapsed'] = result.elapsed
    except (GVMError, ValueError) as ex:
        logger.warning("Recovery run %d failed: %s", run, ex)
        row['status'] = "failed"

    return row


def summarise_recovery(rows, names):
    """
        Mean and standard deviation of the PRE per parameter over the successful runs.
    """
    succeeded = [row for row in rows if row['status'] == "ok"]
    summary = []

    for name in names:
        values = np.array([row[f"pre_{name}"] for row in succeeded], dtype=float)
        values = values[np.isfinite(values)]
        summary.append({
            'parameter': name,
            'mean_pre': float(np.mean(values)) if values.size else np.nan,
            'std_pre': float(np.std(values)) if values.size else np.nan,
            'runs': len(rows),
            'failures': len(rows) - len(succeeded),
        })

    return summary


def cmd_recovery_study(config):
    """
        Repeats sample, estimate and fit over `runs` seeds and writes the
        PRE summary (and optionally the per-run rows), sorted by seed.
    """
    runs = [(config, run) for run in range(config.get("runs"))]
    workers = config.get("workers", 1)

    if workers > 1:
        with Pool(workers) as pool:
            rows = pool.map(recovery_run, runs)
    else:
        rows = [recovery_run(item) for item in runs]

    rows.sort(key=lambda row: row['seed'])
    summary = summarise_recovery(rows, list(config.priors))

    io.write_table_csv(summary, io.output_path(config.out_dir,
                                               config.get("output", "recovery.csv")))
    if config.get("runs_output"):
        io.write_table_csv(rows, io.output_path(config.out_dir, config.get("runs_output")))

    failures = summary[0]['failures'] if summary else 0
    if failures:
        logger.warning("%d of %d recovery runs failed", failures, len(rows))
    return EXIT_OK
