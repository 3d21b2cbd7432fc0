from setuptools import setup

long_description = """
gvmpy

gvmpy estimates the hyperparameters of stationary Gaussian processes without
evaluating the likelihood. It projects the empirical covariance or a
periodogram-type PSD estimate of the data onto a parametric kernel family
under a temporal or spectral divergence (L1, L2, Wasserstein, KL,
Itakura-Saito). For location-scale families under the 2-Wasserstein distance
the solution is available in closed form, in time linear in the data.

It also ships a reference GP core (sampling, exact likelihood, ML refinement)
built on PyTorch and a command-line harness for fits, benchmarks and
parameter recovery studies.
"""

setup(
	name="gvmpy-torch",
	version="0.1.0",
	description="Likelihood-free Gaussian process hyperparameter estimation on top of PyTorch",
	long_description=long_description,
	license="MIT",
	classifiers=[
		"Development Status :: 3 - Alpha",
		"Intended Audience :: Developers",
		"Intended Audience :: Education",
		"Intended Audience :: Science/Research",
		"License :: OSI Approved :: MIT License",
		"Programming Language :: Python :: 3",
		"Programming Language :: Python :: 3.8",
		"Programming Language :: Python :: 3.9",
		"Programming Language :: Python :: 3.10"
	],
	packages=[
		"gvmpy",
		"gvmpy.kernels",
		"gvmpy.estimators",
		"gvmpy.divergences",
		"gvmpy.optimizer",
		"gvmpy.solvers",
		"gvmpy.gp",
		"gvmpy.multiinput",
		"gvmpy.models",
		"gvmpy.cli"
	],
	python_requires=">=3.8",
	install_requires=["torch", "numpy", "scipy", "pandas"],
	extras_require={
		'tests': [
			"pytest",
			"pytest-cov",
			"pot"
		]
	},
	entry_points={
		'console_scripts': [
			"gvmpy=gvmpy.cli.main:main"
		]
	},
	include_package_data=True
)
