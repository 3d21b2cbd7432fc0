import os, pathlib, sys
import pytest

os.chdir( pathlib.Path.cwd() / 'tests/' )

# Extra arguments are passed to pytest, e.g. `python tests.py -m "not slow"`
sys.exit(pytest.main(['--cov', 'gvmpy', '-c', '../setup.cfg'] + sys.argv[1:]))
