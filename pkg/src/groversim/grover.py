"""Grover circuit builders: oracles, diffusion, full search circuits,
rotation-count selection, and the phase-flip diagnostic.

Two interchangeable all-ones oracles are provided.  The composite
multi-controlled-Z builds the phase flip from one-control gates alone
(a gray-code ladder of controlled phase rotations), needs no ancillas,
and grows exponentially with the qubit count.  The V-shaped oracle
computes the AND of the search register into an ancilla ladder with
Toffolis, applies one cZ at the apex, and uncomputes: 2(n-2) Toffolis,
one cZ, n-2 ancillas, for any n.
"""

import enum
import math
from dataclasses import dataclass

from . import analytic
from .circuit import Circuit, GateOp
from .gates import H, U1, X, Z
from .statevector import key_to_index

__all__ = [
    "Pattern",
    "OracleStyle",
    "build_cnz",
    "build_v_oracle",
    "mark_pattern",
    "build_diffusion",
    "build_grover",
    "bqp_rotations",
    "optimal_rotations",
    "build_phase_check",
    "phase_flip_detected",
    "marked_probability",
]


@dataclass(frozen=True)
class Pattern:
    """The marked bit string, qubit 0 leftmost."""

    bits: str

    def __post_init__(self):
        if not self.bits or any(ch not in "01" for ch in self.bits):
            raise ValueError(f"pattern must be a nonempty string over 0/1, got {self.bits!r}")

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def index(self) -> int:
        return key_to_index(self.bits)


class OracleStyle(enum.Enum):
    CNZ = "cnz"
    V_ORACLE = "v"


_CNZ_MAX_QUBITS = 10  # the one-control ladder has 2^(n-1)-1 phase gates; cap it


def _graycode_phase(theta: float, controls: tuple[int, ...], target: int) -> list[GateOp]:
    """Multi-controlled phase(theta) from one-control gates only.

    Walks the gray codes of the control set, XOR-accumulating each subset's
    parity onto one control with cx and applying cu1(+-theta/2^(k-1)) from
    it to the target; signs alternate with subset size.  Controls end up
    restored.  2^k - 1 phase gates for k controls.
    """
    k = len(controls)
    angle = theta / (1 << (k - 1))
    ops = []
    last = 0
    for i in range(1, 1 << k):
        mask = i ^ (i >> 1)
        acc = mask.bit_length() - 1  # the control holding this subset's parity
        if last:
            changed = (mask ^ last).bit_length() - 1
            if changed != acc:
                ops.append(GateOp(X, (controls[changed],), controls[acc]))
            else:
                # accumulator moved to a fresh control: rebuild its parity
                for j in range(acc):
                    if (mask >> j) & 1:
                        ops.append(GateOp(X, (controls[j],), controls[acc]))
        sign = 1.0 if mask.bit_count() % 2 else -1.0
        ops.append(GateOp(U1(sign * angle), (controls[acc],), target))
        last = mask
    return ops


def build_cnz(n: int) -> Circuit:
    """Ancilla-free phase flip of |1...1> on n qubits (unitary diag(1,..,1,-1))."""
    if not 2 <= n <= _CNZ_MAX_QUBITS:
        raise ValueError(f"build_cnz supports 2..{_CNZ_MAX_QUBITS} qubits, got {n}")
    circuit = Circuit(n, 0)
    for op in _graycode_phase(math.pi, tuple(range(n - 1)), n - 1):
        circuit.append(op)
    return circuit


def build_v_oracle(n: int) -> Circuit:
    """All-ones oracle on n search + (n-2) ancilla qubits.

    Toffoli ladder folding the search qubits' AND into the ancillas, a cZ
    between the last ancilla and the last search qubit, then the ladder
    uncomputed in reverse (a palindrome, hence self-inverse).  For n = 2
    the oracle degenerates to a bare cZ with no ancillas.
    """
    if n < 2:
        raise ValueError(f"build_v_oracle requires n >= 2, got {n}")
    if n == 2:
        return Circuit(2, 0).append(GateOp(Z, (0,), 1))
    m = n - 2
    circuit = Circuit(n, m)
    ancilla = lambda j: n + j
    ladder = [GateOp(X, (0, 1), ancilla(0))]
    for k in range(1, m):
        ladder.append(GateOp(X, (k + 1, ancilla(k - 1)), ancilla(k)))
    for op in ladder:
        circuit.append(op)
    circuit.append(GateOp(Z, (ancilla(m - 1),), n - 1))
    for op in reversed(ladder):
        circuit.append(op)
    return circuit


def _all_ones_core(n: int, style: OracleStyle) -> Circuit:
    if n == 1:
        # degenerate single-qubit search: the all-ones oracle is a bare Z
        return Circuit(1, 0).append(GateOp(Z, (), 0))
    if style is OracleStyle.CNZ:
        return build_cnz(n)
    return build_v_oracle(n)


def mark_pattern(core: Circuit, pattern: Pattern) -> Circuit:
    """Turn an all-ones oracle into an oracle for ``pattern``.

    X gates on every search qubit whose pattern bit is 0, on both sides of
    the core, permute the basis so the core's phase flip lands on exactly
    |pattern>.
    """
    if pattern.n != core.search_qubits:
        raise ValueError(
            f"pattern has {pattern.n} bits but the oracle acts on {core.search_qubits} qubits"
        )
    flips = [GateOp(X, (), q) for q in range(pattern.n) if pattern.bits[q] == "0"]
    wrapped = Circuit(core.search_qubits, core.ancilla_qubits)
    for op in flips:
        wrapped.append(op)
    for op in core.ops:
        wrapped.append(op)
    for op in flips:
        wrapped.append(op)
    return wrapped


def _h_layer(n: int) -> list[GateOp]:
    return [GateOp(H, (), q) for q in range(n)]


def _x_layer(n: int) -> list[GateOp]:
    return [GateOp(X, (), q) for q in range(n)]


def build_diffusion(n: int, style: OracleStyle) -> Circuit:
    """Inversion about the mean: H and X layers around the all-ones oracle.

    On a state with clean ancillas and search amplitudes a_i this maps
    a_i -> s*(2*mean - a_i) with a fixed global sign s = -1.
    """
    if n < 2:
        raise ValueError(f"build_diffusion requires n >= 2, got {n}")
    core = _all_ones_core(n, style)
    circuit = Circuit(n, core.ancilla_qubits)
    for op in _h_layer(n) + _x_layer(n) + core.ops + _x_layer(n) + _h_layer(n):
        circuit.append(op)
    return circuit


def build_grover(pattern: Pattern, rotations: int, style: OracleStyle = OracleStyle.V_ORACLE) -> Circuit:
    """Full search circuit: H layer, then (oracle ; diffusion) repeated.

    Ancillas are allocated once and shared by every rotation.  Group
    metadata marks each oracle block — the pattern oracle and the all-ones
    core inside each diffusion — as "oracle", so a k-rotation circuit
    carries 2k oracle groups, and the surrounding diffusion layers as
    "diffusion".
    """
    if rotations < 1:
        raise ValueError(f"rotations must be >= 1, got {rotations}")
    n = pattern.n
    core = _all_ones_core(n, style)
    marked = mark_pattern(core, pattern)
    circuit = Circuit(n, core.ancilla_qubits)
    for op in _h_layer(n):
        circuit.append(op)
    diffusion_in = _h_layer(n) + _x_layer(n)
    diffusion_out = _x_layer(n) + _h_layer(n)
    for _ in range(rotations):
        circuit.append_group("oracle", marked.ops)
        circuit.append_group("diffusion", diffusion_in)
        circuit.append_group("oracle", core.ops)
        circuit.append_group("diffusion", diffusion_out)
    return circuit


def bqp_rotations(n: int) -> int:
    """Smallest rotation count guaranteeing success probability >= 2/3.

    ceil(0.8165 * sqrt(2^n)): each early rotation grows the marked
    amplitude by at least 1/sqrt(N), and 0.8165^2 >= 2/3.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return math.ceil(0.8165 * math.sqrt(2.0**n))


def optimal_rotations(n: int) -> int:
    """Rotation count maximizing the marked probability, by the recurrence.

    Scans 1..bqp_rotations(n)+2; ties break toward fewer rotations.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    state = analytic.initial_state(n)
    best_k, best_p = 1, -1.0
    for k in range(1, bqp_rotations(n) + 3):
        state = analytic.rotate(state)
        p = state.marked_amp**2
        if p > best_p:
            best_k, best_p = k, p
    return best_k


def build_phase_check(pattern: Pattern, style: OracleStyle | None = OracleStyle.V_ORACLE) -> Circuit:
    """Diagnostic circuit that makes an oracle's phase flip measurable.

    H layer, the pattern oracle, H on all search qubits, then X only on
    qubits whose pattern bit is 1 (none for an all-zeros pattern).  With a
    working oracle the distribution shows a distinct tower at the pattern;
    ``style=None`` substitutes the identity for the oracle, the null case
    the verdict must reject.
    """
    n = pattern.n
    if style is None:
        oracle_ops, ancillas = [], 0
    else:
        marked = mark_pattern(_all_ones_core(n, style), pattern)
        oracle_ops, ancillas = marked.ops, marked.ancilla_qubits
    circuit = Circuit(n, ancillas)
    for op in _h_layer(n):
        circuit.append(op)
    if oracle_ops:
        circuit.append_group("oracle", oracle_ops)
    for op in _h_layer(n):
        circuit.append(op)
    for q in range(n):
        if pattern.bits[q] == "1":
            circuit.append(GateOp(X, (), q))
    return circuit


def phase_flip_detected(probabilities: dict[str, float]) -> bool:
    """Distinct-tower verdict over a phase-check distribution.

    Detected iff the modal outcome is at least twice as probable as the
    runner-up AND the runner-up is visible at all: an oracle that never
    flipped a phase funnels everything into a single outcome, which is a
    spike, not a tower over a floor of states.
    """
    ranked = sorted(probabilities.values(), reverse=True)
    if len(ranked) < 2:
        return False
    top, second = ranked[0], ranked[1]
    return second > 0.0 and top >= 2.0 * second


def marked_probability(pattern: Pattern, rotations: int, style: OracleStyle = OracleStyle.V_ORACLE) -> float:
    """Exact probability of reading ``pattern`` after a simulated search."""
    state = build_grover(pattern, rotations, style).run()
    return state.probability(pattern.bits)
