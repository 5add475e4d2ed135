"""Real-amplitude recurrence for Grover dynamics.

One marked state against N-1 unmarked states: the oracle flips the marked
amplitude's sign, diffusion reflects every amplitude about the mean.  The
iteration stays inside the real span of the marked state and the uniform
superposition, so signed real amplitudes describe it exactly.  This module
is the derived-probability generator and the independent cross-check for
the simulator.
"""

import math
from dataclasses import dataclass

__all__ = [
    "AnalyticState",
    "initial_state",
    "mean_after_oracle",
    "rotate",
    "marked_probability_after",
    "probability_table",
]


@dataclass(frozen=True)
class AnalyticState:
    """Amplitudes after ``rotations`` completed Grover rotations.

    Invariant (maintained by rotate, checked in tests):
    marked_amp^2 + (num_states - 1) * unmarked_amp^2 == 1.
    """

    num_qubits: int
    num_states: int
    marked_amp: float
    unmarked_amp: float
    rotations: int


def initial_state(num_qubits: int) -> AnalyticState:
    """Uniform superposition: every amplitude 1/sqrt(N)."""
    if num_qubits < 1:
        raise ValueError(f"num_qubits must be >= 1, got {num_qubits}")
    size = 2**num_qubits
    amp = 1.0 / math.sqrt(size)
    return AnalyticState(num_qubits, size, amp, amp, 0)


def mean_after_oracle(state: AnalyticState) -> float:
    """Mean amplitude once the oracle has flipped the marked state's sign.

    ((N-1)*a - alpha)/N; from the uniform state this is (N-2)/(N*sqrt(N)).
    """
    size = state.num_states
    return ((size - 1) * state.unmarked_amp - state.marked_amp) / size


def rotate(state: AnalyticState) -> AnalyticState:
    """One Grover rotation: sign flip on the marked state, then reflection
    of every amplitude about the post-flip mean."""
    size = state.num_states
    flipped = -state.marked_amp
    mean = ((size - 1) * state.unmarked_amp + flipped) / size
    return AnalyticState(
        num_qubits=state.num_qubits,
        num_states=size,
        marked_amp=2.0 * mean - flipped,
        unmarked_amp=2.0 * mean - state.unmarked_amp,
        rotations=state.rotations + 1,
    )


def marked_probability_after(num_qubits: int, rotations: int) -> float:
    """Marked-state probability after ``rotations`` rotations from uniform."""
    if rotations < 0:
        raise ValueError(f"rotations must be >= 0, got {rotations}")
    state = initial_state(num_qubits)
    for _ in range(rotations):
        state = rotate(state)
    return state.marked_amp**2


def probability_table(num_qubits: int, max_rotations: int) -> list[tuple[int, float]]:
    """Rows (k, derived marked probability) for k = 1..max_rotations."""
    if max_rotations < 1:
        raise ValueError(f"max_rotations must be >= 1, got {max_rotations}")
    rows = []
    state = initial_state(num_qubits)
    for k in range(1, max_rotations + 1):
        state = rotate(state)
        rows.append((k, state.marked_amp**2))
    return rows
