"""Dense statevector: 2^q complex amplitudes, gate application, sampling.

Bit order: qubit k is bit k of the amplitude index, so qubit 0 is the
least significant bit.  Outcome and pattern strings are written with
qubit 0 as the leftmost character; ``index_to_key`` / ``key_to_index``
are the only two places that mapping lives.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NormDriftError, ResourceLimitError
from .gates import GateKind, gate_matrix
from .prng import Xorshift64Star

# 2^26 complex doubles = 1 GiB of amplitudes; raise this only with the RAM to match.
MAX_QUBITS = 26

_DRIFT_ATOL = 1e-8  # norm drift beyond this is an internal kernel error

_SEED_MASK = (1 << 64) - 1


def index_to_key(index: int, num_qubits: int) -> str:
    """Render a basis index as a bit string, qubit 0 leftmost."""
    return "".join("1" if (index >> k) & 1 else "0" for k in range(num_qubits))


def key_to_index(key: str) -> int:
    """Parse a bit string written with qubit 0 leftmost."""
    index = 0
    for k, ch in enumerate(key):
        if ch == "1":
            index |= 1 << k
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r} in {key!r}")
    return index


@dataclass(frozen=True)
class Histogram:
    """Seeded shot-sampling result plus the exact distribution it was drawn from.

    ``counts`` holds only outcomes that were actually observed;
    ``exact_probabilities`` lists every outcome of the measured register.
    """

    shots: int
    counts: dict[str, int]
    exact_probabilities: dict[str, float]
    seed: int


class StateVector:
    """Mutable dense state over ``num_qubits`` qubits.

    A StateVector is exclusively owned while being mutated; read-only
    queries (norm, probabilities) are safe to share.
    """

    def __init__(self, num_qubits: int, amplitudes=None):
        if num_qubits < 1:
            raise ValueError(f"num_qubits must be >= 1, got {num_qubits}")
        if num_qubits > MAX_QUBITS:
            raise ResourceLimitError(
                f"{num_qubits} qubits exceeds the {MAX_QUBITS}-qubit dense-state limit"
            )
        dim = 1 << num_qubits
        if amplitudes is None:
            amps = np.zeros(dim, dtype=np.complex128)
            amps[0] = 1.0
        else:
            amps = np.array(amplitudes, dtype=np.complex128).reshape(-1)
            if amps.shape[0] != dim:
                raise ValueError(f"expected {dim} amplitudes, got {amps.shape[0]}")
        self.num_qubits = num_qubits
        self.amplitudes = amps
        if amplitudes is not None:
            self._check_norm()

    def copy(self) -> "StateVector":
        clone = StateVector.__new__(StateVector)
        clone.num_qubits = self.num_qubits
        clone.amplitudes = self.amplitudes.copy()
        return clone

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.amplitudes, self.amplitudes).real))

    def _check_norm(self):
        norm = self.norm()
        if abs(norm - 1.0) > _DRIFT_ATOL:
            raise NormDriftError(f"state norm drifted to {norm!r}")

    def apply_gate(self, kind: GateKind, controls, target: int) -> None:
        """Apply ``kind`` to ``target``, conditioned on every control being 1.

        Empty controls is a plain single-qubit gate; two controls with X is
        the Toffoli gate; one or more controls with Z realize cZ / multi-cZ.
        Mutates the state in place.
        """
        controls = tuple(controls)
        if not 0 <= target < self.num_qubits:
            raise ValueError(f"target {target} out of range for {self.num_qubits} qubits")
        control_mask = 0
        for c in controls:
            if not 0 <= c < self.num_qubits:
                raise ValueError(f"control {c} out of range for {self.num_qubits} qubits")
            if c == target:
                raise ValueError(f"target {target} may not also be a control")
            bit = 1 << c
            if control_mask & bit:
                raise ValueError(f"duplicate control qubit {c}")
            control_mask |= bit
        m = gate_matrix(kind)
        kernels.apply_2x2(
            self.amplitudes, m[0, 0], m[0, 1], m[1, 0], m[1, 1], target, control_mask
        )
        self._check_norm()

    def _prob_vector(self, measured: int | None) -> np.ndarray:
        if measured is None:
            measured = self.num_qubits
        if not 1 <= measured <= self.num_qubits:
            raise ValueError(f"measured must be in 1..{self.num_qubits}, got {measured}")
        probs = np.abs(self.amplitudes) ** 2
        if measured < self.num_qubits:
            # qubits above `measured` are summed out (marginal distribution)
            probs = probs.reshape(1 << (self.num_qubits - measured), 1 << measured).sum(axis=0)
        return probs

    def probabilities(self, measured: int | None = None) -> dict[str, float]:
        """Exact outcome distribution: every basis state of the measured register.

        ``measured`` restricts the readout to the lowest ``measured`` qubits
        (marginalizing the rest); default is the full register.
        """
        self._check_norm()
        probs = self._prob_vector(measured)
        width = measured if measured is not None else self.num_qubits
        return {index_to_key(i, width): float(p) for i, p in enumerate(probs)}

    def probability(self, key: str) -> float:
        """Marginal probability that the lowest len(key) qubits read ``key``."""
        return float(self._prob_vector(len(key))[key_to_index(key)])

    def sample(self, shots: int, seed: int, measured: int | None = None) -> Histogram:
        """Draw ``shots`` outcomes by inverse CDF over the exact distribution.

        The xorshift64* stream seeded by ``seed`` supplies the uniforms, so
        identical (state, shots, seed) always yield an identical Histogram.
        """
        if shots < 1:
            raise ValueError(f"shots must be >= 1, got {shots}")
        self._check_norm()
        probs = self._prob_vector(measured)
        width = measured if measured is not None else self.num_qubits
        cumulative = np.cumsum(probs)
        rng = Xorshift64Star(seed)
        draws = np.array([rng.next_double() for _ in range(shots)])
        outcomes = np.searchsorted(cumulative, draws, side="right")
        np.clip(outcomes, 0, probs.shape[0] - 1, out=outcomes)
        indices, tallies = np.unique(outcomes, return_counts=True)
        counts = {index_to_key(int(i), width): int(c) for i, c in zip(indices, tallies)}
        exact = {index_to_key(i, width): float(p) for i, p in enumerate(probs)}
        return Histogram(shots=shots, counts=counts, exact_probabilities=exact, seed=seed & _SEED_MASK)


def new_zero_state(num_qubits: int) -> StateVector:
    """The all-zeros computational basis state |0...0>."""
    return StateVector(num_qubits)


def basis_state(num_qubits: int, index: int) -> StateVector:
    """The computational basis state with the given amplitude index."""
    state = StateVector(num_qubits)
    if not 0 <= index < (1 << num_qubits):
        raise ValueError(f"basis index {index} out of range for {num_qubits} qubits")
    state.amplitudes[0] = 0.0
    state.amplitudes[index] = 1.0
    return state


def circuit_unitary(circuit) -> np.ndarray:
    """Full 2^q x 2^q unitary, by running the circuit on every basis column.

    Verification-scale only (q <= 10); this is the brute-force reference the
    oracle and diffusion tests check the builders against.
    """
    q = circuit.total_qubits
    if q > 10:
        raise ResourceLimitError(f"circuit_unitary supports at most 10 qubits, got {q}")
    dim = 1 << q
    unitary = np.empty((dim, dim), dtype=np.complex128)
    for col in range(dim):
        state = basis_state(q, col)
        for op in circuit.ops:
            state.apply_gate(op.kind, op.controls, op.target)
        unitary[:, col] = state.amplitudes
    return unitary
