"""Primitive gate set: the 2x2 base matrices every circuit is built from.

Parameterized phase gates follow the diag(1, e^{i theta}) convention, so
U1(pi/4) reproduces T exactly.  RZ uses the half-angle convention
diag(e^{-i theta/2}, e^{i theta/2}); the two differ only by a global phase
as single-qubit gates but are distinct unitaries once a control is added.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["GateKind", "H", "X", "Z", "T", "TDAG", "U1", "RZ", "gate_matrix", "gate_inverse"]

_FIXED = ("h", "x", "z", "t", "tdg")
_PARAMETERIZED = ("u1", "rz")


@dataclass(frozen=True)
class GateKind:
    """A gate variant: a fixed name plus an optional angle in radians."""

    name: str
    theta: float | None = None

    def __post_init__(self):
        if self.name in _PARAMETERIZED:
            if self.theta is None or not math.isfinite(self.theta):
                raise ValueError(f"gate {self.name!r} requires a finite angle, got {self.theta!r}")
        elif self.name in _FIXED:
            if self.theta is not None:
                raise ValueError(f"gate {self.name!r} takes no angle")
        else:
            raise ValueError(f"unknown gate kind {self.name!r}")

    def __repr__(self):
        if self.theta is None:
            return f"GateKind({self.name!r})"
        return f"GateKind({self.name!r}, theta={self.theta!r})"


H = GateKind("h")
X = GateKind("x")
Z = GateKind("z")
T = GateKind("t")
TDAG = GateKind("tdg")


def U1(theta: float) -> GateKind:
    """Phase gate diag(1, e^{i theta})."""
    return GateKind("u1", float(theta))


def RZ(theta: float) -> GateKind:
    """Z rotation diag(e^{-i theta/2}, e^{i theta/2})."""
    return GateKind("rz", float(theta))


_SQRT1_2 = 1.0 / math.sqrt(2.0)


def _phase_matrix(theta: float) -> np.ndarray:
    return np.array([[1.0, 0.0], [0.0, np.exp(1j * theta)]], dtype=np.complex128)


def gate_matrix(kind: GateKind) -> np.ndarray:
    """Return the 2x2 complex matrix for ``kind``.

    T is built through the same path as U1(pi/4) and TDAG as the conjugate
    transpose of T, so those identities hold exactly, not just to rounding.
    """
    name = kind.name
    if name == "h":
        return np.array([[_SQRT1_2, _SQRT1_2], [_SQRT1_2, -_SQRT1_2]], dtype=np.complex128)
    if name == "x":
        return np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
    if name == "z":
        return np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
    if name == "t":
        return _phase_matrix(math.pi / 4)
    if name == "tdg":
        return _phase_matrix(math.pi / 4).conj().T
    if name == "u1":
        return _phase_matrix(kind.theta)
    if name == "rz":
        return np.array(
            [[np.exp(-0.5j * kind.theta), 0.0], [0.0, np.exp(0.5j * kind.theta)]],
            dtype=np.complex128,
        )
    raise ValueError(f"unknown gate kind {name!r}")


def gate_inverse(kind: GateKind) -> GateKind:
    """The kind whose matrix is the conjugate transpose of ``kind``'s."""
    if kind.name in ("h", "x", "z"):
        return kind
    if kind.name == "t":
        return TDAG
    if kind.name == "tdg":
        return T
    return GateKind(kind.name, -kind.theta)
