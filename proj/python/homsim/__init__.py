"""Python bindings for the homsim C++ core.

The JSON-returning entry points are wrapped so callers get plain dicts and lists.
"""

import json as _json

from ._core import (  # noqa: F401
    InvariantViolation,
    circuit_metrics,
    creation_matrix,
    creation_terms,
    exact_unitary,
    gray_bits,
    interaction_terms,
    rng_algorithm,
    synthesize_qasm,
)
from . import _core


def run_hom(**config):
    return _json.loads(_core.run_hom(_json.dumps(config)))


def sweep_trotter(steps_list, **config):
    return _json.loads(_core.sweep_trotter(_json.dumps(config), list(steps_list)))


def sweep_theta(thetas, circuit_path=False, **config):
    return _json.loads(_core.sweep_theta(_json.dumps(config), list(thetas), circuit_path))
