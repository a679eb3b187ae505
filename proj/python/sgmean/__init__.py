"""Weighted geometric and spectral geometric matrix means, generalized
Kantorovich constants, and a seeded verification suite for the order
inequalities relating them.

The heavy lifting happens in the compiled extension ``sgmean._core``;
this package re-exports it and adds a dict-returning ``verify`` helper.
"""

import json as _json

from sgmean._core import (  # noqa: F401
    __version__,
    arithmetic_mean,
    bundle,
    eigh,
    geometric_mean,
    harmonic_mean,
    kantorovich_dx,
    kantorovich_lower,
    kantorovich_mm,
    kantorovich_x,
    kappa1,
    kappa2,
    kappa_order_gap,
    loewner_margin,
    matrix_power,
    random_pd,
    run_suite,
    scalar_mean,
    spectral_geometric_mean,
    spectral_residual,
)


def verify(seed=42, trials=200, dims=(), tol=1e-8, falsification_trials=200):
    """Run the inequality suite and return the report as a dict."""
    raw = run_suite(
        seed=seed,
        trials=trials,
        dims=list(dims),
        tol=tol,
        falsification_trials=falsification_trials,
    )
    return _json.loads(raw)
