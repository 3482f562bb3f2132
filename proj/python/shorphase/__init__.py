"""Phase-based Shor factoring: circuit construction, statevector simulation
and classical post-processing, backed by a C++ core."""

import json as _json

from ._core import (  # noqa: F401
    Circuit,
    CircuitSpec,
    ResourceError,
    analytic_distribution,
    block_coefficient,
    build_iqft,
    build_qft,
    build_shor_circuit,
    circuit_params,
    gcd,
    modpow,
    multiplicative_order,
    parse_circuit,
    phase_of,
    phase_to_l,
    postprocess,
    quantize_phase,
    simulate_distribution,
    trial_factor,
)
from . import _core

__version__ = "0.1.0"


def factor(N, a=None, *, shots=150, runs=1, seed=0, policy="first",
           backend="sim", lower_bits=None, gcd_shortcut=False, jobs=1):
    """Run the factoring loop and return the report as a dict."""
    text = _core.factor_json(N, a, shots, runs, seed, policy, backend,
                             lower_bits, gcd_shortcut, jobs)
    return _json.loads(text)
