"""CSV and JSON files read and written by the command-line interface"""

import json
import os

import numpy as np
import pandas as pd

from ..estimators import EmpiricalCovariance, SpectralEstimate, TimeSeries
from ..multiinput import PointCloudSeries
from ..exceptions import GVMError
from ..solvers import to_jsonable


class DataFileError(OSError):
    """
        Raised when an input file can be read but does not hold valid data.
    """


def _read_numeric_csv(path):
    """
        Reads a CSV whose header row is optional; returns (column names, float frame).
    """
    frame = pd.read_csv(path, header=None, dtype=str, skipinitialspace=True)

    if frame.empty:
        raise DataFileError(f"{path} holds no data")

    first = pd.to_numeric(frame.iloc[0], errors="coerce")
    if first.isna().any():
        names = [str(name).strip() for name in frame.iloc[0]]
        frame = frame.iloc[1:]
    else:
        names = None

    try:
        frame = frame.apply(pd.to_numeric, errors="raise").astype(float)
    except (TypeError, ValueError) as ex:
        raise DataFileError(f"{path} holds non-numeric values") from ex

    return names, frame.reset_index(drop=True)


def read_series_csv(path):
    """
        Reads a TimeSeries from a two-column `time,value` CSV; rows are sorted by time.
    """
    _, frame = _read_numeric_csv(path)

    if frame.shape[1] != 2:
        raise DataFileError(f"{path} should have two columns, time and value")

    frame = frame.sort_values(by=frame.columns[0], kind="mergesort")
    try:
        return TimeSeries(frame.iloc[:, 0].to_numpy(), frame.iloc[:, 1].to_numpy())
    except (GVMError, ValueError) as ex:
        raise DataFileError(f"{path} does not hold a valid time series: {ex}") from ex


def write_series_csv(ts, path):
    pd.DataFrame({'time': ts.times, 'value': ts.values}).to_csv(path, index=False)


def read_point_cloud_csv(path):
    """
        Reads a PointCloudSeries from a `x1,..,xd,value` CSV.
    """
    _, frame = _read_numeric_csv(path)

    if frame.shape[1] < 2:
        raise DataFileError(f"{path} should have at least two columns, x1 and value")

    try:
        return PointCloudSeries(frame.iloc[:, :-1].to_numpy(), frame.iloc[:, -1].to_numpy())
    except (GVMError, ValueError) as ex:
        raise DataFileError(f"{path} does not hold a valid point cloud: {ex}") from ex


def write_point_cloud_csv(pc, path):
    columns = {f"x{index + 1}": pc.locations[:, index] for index in range(pc.input_dim)}
    columns['value'] = pc.values
    pd.DataFrame(columns).to_csv(path, index=False)


def write_covariance_csv(cov, path):
    pd.DataFrame({'lag': cov.lag_centers, 'estimate': cov.estimates,
                  'count': cov.counts}).to_csv(path, index=False)


def read_covariance_csv(path, bin_width=None):
    """
        Reads a `lag,estimate,count` CSV; the bin width defaults to the
        smallest non-zero lag.
    """
    frame = pd.read_csv(path)

    if list(frame.columns) != ['lag', 'estimate', 'count']:
        raise DataFileError(f"{path} should have the columns lag, estimate, count")

    lags = frame['lag'].to_numpy(dtype=float)
    bin_width = float(lags[1]) if bin_width is None and lags.size > 1 else bin_width
    return EmpiricalCovariance(lags, frame['estimate'].to_numpy(dtype=float),
                               frame['count'].to_numpy(dtype=np.int64), bin_width or 1.0)


def write_spectrum_csv(s, path):
    pd.DataFrame({'freq': s.freqs, 'psd': s.psd}).to_csv(path, index=False)


def read_spectrum_csv(path, onesided=True):
    frame = pd.read_csv(path)

    if list(frame.columns) != ['freq', 'psd']:
        raise DataFileError(f"{path} should have the columns freq, psd")

    return SpectralEstimate(frame['freq'].to_numpy(dtype=float),
                            frame['psd'].to_numpy(dtype=float), onesided=onesided)


def write_fit_csv(grid_name, grid, empirical, fitted, path):
    """
        Plot data of a fit: the grid, the data statistic and the fitted model on it.
    """
    pd.DataFrame({grid_name: grid, 'empirical': empirical, 'fitted': fitted}).to_csv(
        path, index=False)


def read_table_csv(path):
    return pd.read_csv(path)


def write_table_csv(rows, path, columns=None):
    pd.DataFrame(rows, columns=columns).to_csv(path, index=False)


def read_json(path):
    with open(path, "r", encoding="utf-8") as file:
        return json.load(file)


def write_json(details, path):
    """
        Writes a dict as indented JSON with sorted keys, so equal inputs give equal bytes.
    """
    with open(path, "w", encoding="utf-8") as file:
        json.dump(to_jsonable(details), file, indent=2, sort_keys=True)
        file.write("\n")


def output_path(out_dir, name):
    os.makedirs(out_dir, exist_ok=True)
    return os.path.join(out_dir, name)
