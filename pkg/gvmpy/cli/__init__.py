"""
    Command-line interface: `gvmpy <fit|sample|estimate|benchmark|recover>
    --config <file.json> [--seed N] [--out-dir DIR] [-v]`.

    Exit codes: 0 success, 1 invalid configuration, 2 input/output error,
    3 numerical failure.
"""

from .config import ExperimentConfig, SyntheticSpec, COMMANDS
from .commands import cmd_fit, cmd_sample, cmd_estimate, cmd_benchmark, cmd_recovery_study
from .main import main, build_parser, run
