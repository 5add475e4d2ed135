"""Circuit IR: an ordered gate sequence over search + ancilla registers.

Ancilla qubits sit at indices n..n+m-1, after all search qubits, so pattern
strings stay aligned with search-register indices.  Groups are flat metadata
(name plus op index range) for subcircuit bookkeeping; they never affect
simulation.  Measurement is not an op: sampling lives in the statevector
layer, which keeps the IR purely unitary and reversible.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import QasmExportError
from .gates import GateKind
from .statevector import StateVector, new_zero_state

__all__ = ["GateOp", "Group", "Circuit", "CircuitStats", "export_qasm"]


@dataclass(frozen=True)
class GateOp:
    """One gate application: kind, control qubits, target qubit."""

    kind: GateKind
    controls: tuple[int, ...]
    target: int
    label: str | None = None


@dataclass(frozen=True)
class Group:
    """Named, non-overlapping op range [start, stop); pure metadata."""

    name: str
    start: int
    stop: int


@dataclass(frozen=True)
class CircuitStats:
    """Gate tallies keyed by QASM-style name ('ccx' = Toffoli, 'cz', ...)."""

    gate_counts: dict[str, int]
    total_ops: int
    ancilla_qubits: int


def _op_name(op: GateOp) -> str:
    return "c" * len(op.controls) + op.kind.name


class Circuit:
    def __init__(self, search_qubits: int, ancilla_qubits: int = 0):
        if search_qubits < 1:
            raise ValueError(f"search_qubits must be >= 1, got {search_qubits}")
        if ancilla_qubits < 0:
            raise ValueError(f"ancilla_qubits must be >= 0, got {ancilla_qubits}")
        self.search_qubits = search_qubits
        self.ancilla_qubits = ancilla_qubits
        self.ops: list[GateOp] = []
        self.groups: list[Group] = []

    @property
    def total_qubits(self) -> int:
        return self.search_qubits + self.ancilla_qubits

    def _validate(self, op: GateOp) -> None:
        total = self.total_qubits
        if not 0 <= op.target < total:
            raise ValueError(f"target {op.target} out of range for {total} qubits")
        seen = set()
        for c in op.controls:
            if not 0 <= c < total:
                raise ValueError(f"control {c} out of range for {total} qubits")
            if c == op.target:
                raise ValueError(f"target {op.target} may not also be a control")
            if c in seen:
                raise ValueError(f"duplicate control qubit {c}")
            seen.add(c)

    def append(self, op: GateOp) -> "Circuit":
        self._validate(op)
        self.ops.append(op)
        return self

    def append_group(self, name: str, ops) -> "Circuit":
        """Append ``ops`` in order and record them as one named group."""
        start = len(self.ops)
        for op in ops:
            self.append(op)
        self.groups.append(Group(name, start, len(self.ops)))
        return self

    def run(self, initial: StateVector | None = None) -> StateVector:
        """Apply all ops in order; ``initial`` defaults to |0...0>.

        The initial state is copied, never mutated.
        """
        if initial is None:
            state = new_zero_state(self.total_qubits)
        else:
            if initial.num_qubits != self.total_qubits:
                raise ValueError(
                    f"initial state has {initial.num_qubits} qubits, circuit needs {self.total_qubits}"
                )
            state = initial.copy()
        for op in self.ops:
            state.apply_gate(op.kind, op.controls, op.target)
        return state

    def stats(self) -> CircuitStats:
        counts = Counter(_op_name(op) for op in self.ops)
        return CircuitStats(dict(counts), len(self.ops), self.ancilla_qubits)


# (kind name, control arity) -> qelib1.inc gate name
_QASM_NAMES = {
    ("h", 0): "h",
    ("x", 0): "x",
    ("x", 1): "cx",
    ("x", 2): "ccx",
    ("z", 0): "z",
    ("z", 1): "cz",
    ("t", 0): "t",
    ("tdg", 0): "tdg",
    ("u1", 0): "u1",
    ("u1", 1): "cu1",
    ("rz", 0): "rz",
    ("rz", 1): "crz",
}


def export_qasm(circuit: Circuit) -> str:
    """Serialize to OpenQASM 2.0, byte-deterministically.

    One line per op, in order, then measurement of the search register.
    Multi-controlled ops with arity > 2 (or any (kind, arity) pair outside
    the qelib1 subset) must be pre-decomposed; exporting them raw is an
    error naming the offending op index.  Labels are metadata and are not
    emitted.  Angles are printed with 17 significant digits.
    """
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"qreg q[{circuit.total_qubits}];",
        f"creg c[{circuit.search_qubits}];",
    ]
    for i, op in enumerate(circuit.ops):
        name = _QASM_NAMES.get((op.kind.name, len(op.controls)))
        if name is None:
            raise QasmExportError(
                f"op {i} ({_op_name(op)}) is not expressible in the OpenQASM 2.0 subset; "
                "pre-decompose it"
            )
        if op.kind.theta is not None:
            name = f"{name}({op.kind.theta:.17g})"
        operands = ",".join(f"q[{q}]" for q in (*op.controls, op.target))
        lines.append(f"{name} {operands};")
    for i in range(circuit.search_qubits):
        lines.append(f"measure q[{i}] -> c[{i}];")
    return "\n".join(lines) + "\n"
