"""Heavy-tailed econometrics toolkit.

Modules: stable (Levy alpha-stable laws), momtest (randomized finite-moment
tests), regress (Cauchy-error robust and OLS panel regression), replicator
(multi-level replicator dynamics and synthetic panels), analysis
(correlation/autocorrelation/dispersion analytics), panel (panel data model
and CSV I/O), cli (command-line entry point).
"""

__version__ = "0.1.0"

from . import errors  # noqa: F401
