"""Dense-statevector quantum circuit simulator and scalable Grover's-search
circuit builder.

The gate kernel runs on a compiled Cython core when built, with a numpy
fallback selected at import time; ``kernel_backend()`` reports which one
is active.
"""

from . import analytic
from .circuit import Circuit, CircuitStats, GateOp, Group, export_qasm
from .errors import NormDriftError, QasmExportError, ResourceLimitError
from .gates import GateKind, H, RZ, T, TDAG, U1, X, Z, gate_inverse, gate_matrix
from .grover import (
    OracleStyle,
    Pattern,
    bqp_rotations,
    build_cnz,
    build_diffusion,
    build_grover,
    build_phase_check,
    build_v_oracle,
    mark_pattern,
    marked_probability,
    optimal_rotations,
    phase_flip_detected,
)
from .kernels import BACKEND as _KERNEL_BACKEND
from .statevector import (
    MAX_QUBITS,
    Histogram,
    StateVector,
    basis_state,
    circuit_unitary,
    index_to_key,
    key_to_index,
    new_zero_state,
)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Name of the active gate-kernel backend: 'cython' or 'python'."""
    return _KERNEL_BACKEND


__all__ = [
    "analytic",
    "Circuit",
    "CircuitStats",
    "GateOp",
    "Group",
    "export_qasm",
    "NormDriftError",
    "QasmExportError",
    "ResourceLimitError",
    "GateKind",
    "H",
    "X",
    "Z",
    "T",
    "TDAG",
    "U1",
    "RZ",
    "gate_matrix",
    "gate_inverse",
    "OracleStyle",
    "Pattern",
    "bqp_rotations",
    "build_cnz",
    "build_diffusion",
    "build_grover",
    "build_phase_check",
    "build_v_oracle",
    "mark_pattern",
    "marked_probability",
    "optimal_rotations",
    "phase_flip_detected",
    "MAX_QUBITS",
    "Histogram",
    "StateVector",
    "basis_state",
    "circuit_unitary",
    "index_to_key",
    "key_to_index",
    "new_zero_state",
    "kernel_backend",
    "__version__",
]
