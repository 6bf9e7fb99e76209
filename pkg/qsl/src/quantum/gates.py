"""Gates and unitary conjugation."""

from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from qsl import constants
from qsl.src.quantum.state import QuantumState, QuantumStateError, embed_operator


class GateLabel(StrEnum):
    """Names of the supported gates."""

    IDENTITY = "Identity"
    PAULI_X = "PauliX"
    PAULI_Y = "PauliY"
    PAULI_Z = "PauliZ"
    I_SIGMA_Y = "ISigmaY"
    CUSTOM = "Custom"


def is_unitary(matrix: np.ndarray) -> bool:
    """Check U^dagger U = I within the state tolerance."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    identity = np.eye(matrix.shape[0], dtype=complex)
    return bool(
        np.allclose(
            matrix.conj().T @ matrix, identity, rtol=0, atol=constants.STATE_TOLERANCE
        )
    )


@dataclass(frozen=True, eq=False)
class Gate:
    """Unitary acting on one qubit, or on 2^d dimensions for custom joint gates."""

    label: GateLabel
    matrix: np.ndarray

    def __post_init__(self) -> None:
        """Validate the unitary."""
        matrix = np.array(self.matrix, dtype=complex)
        dim = matrix.shape[0] if matrix.ndim == 2 else 0
        if dim < 2 or dim & (dim - 1):
            raise QuantumStateError(
                f"gate matrix must be square with power-of-two size, got {matrix.shape}"
            )
        if self.label != GateLabel.CUSTOM and dim != 2:
            raise QuantumStateError(f"{self.label} gate must be 2x2")
        if not is_unitary(matrix):
            raise QuantumStateError(f"{self.label} gate matrix is not unitary")
        matrix.flags.writeable = False
        object.__setattr__(self, "label", GateLabel(self.label))
        object.__setattr__(self, "matrix", matrix)

    @property
    def num_qubits(self) -> int:
        """Return the number of qubits the gate acts on."""
        return int(np.log2(self.matrix.shape[0]))


IDENTITY = Gate(GateLabel.IDENTITY, np.eye(2))
PAULI_X = Gate(GateLabel.PAULI_X, np.array([[0, 1], [1, 0]]))
PAULI_Y = Gate(GateLabel.PAULI_Y, np.array([[0, -1j], [1j, 0]]))
PAULI_Z = Gate(GateLabel.PAULI_Z, np.array([[1, 0], [0, -1]]))
# i*sigma_y = [[0, 1], [-1, 0]]: a logical NOT up to phase
I_SIGMA_Y = Gate(GateLabel.I_SIGMA_Y, np.array([[0, 1], [-1, 0]]))


def custom_gate(matrix: np.ndarray) -> Gate:
    """Wrap a user supplied unitary, rejecting non-unitary input."""
    return Gate(GateLabel.CUSTOM, matrix)


def apply_unitary(state: QuantumState, unitary: np.ndarray) -> QuantumState:
    """Conjugate the whole register: rho -> U rho U^dagger."""
    unitary = np.asarray(unitary, dtype=complex)
    if unitary.shape != (state.dim, state.dim):
        raise QuantumStateError(
            f"unitary of shape {unitary.shape} does not match "
            f"{state.num_qubits}-qubit state"
        )
    if not is_unitary(unitary):
        raise QuantumStateError("matrix is not unitary")
    matrix = unitary @ state.matrix @ unitary.conj().T
    return QuantumState.trusted(state.num_qubits, (matrix + matrix.conj().T) / 2)


def apply_gate(state: QuantumState, gate: Gate, target: int) -> QuantumState:
    """Apply a gate whose first qubit is the target qubit."""
    if not 0 <= target < state.num_qubits:
        raise QuantumStateError(
            f"qubit index {target} out of range for {state.num_qubits} qubit(s)"
        )
    full = embed_operator(gate.matrix, state.num_qubits, target)
    matrix = full @ state.matrix @ full.conj().T
    return QuantumState.trusted(state.num_qubits, (matrix + matrix.conj().T) / 2)


def rotation_y(theta: float) -> np.ndarray:
    """Single-qubit Y rotation exp(-i theta sigma_y / 2)."""
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def controlled(
    operator: np.ndarray, control: int, target: int, num_qubits: int
) -> np.ndarray:
    """Apply a single-qubit operator on target when control is |1>."""
    if control == target:
        raise QuantumStateError("control and target qubits must differ")
    projector_0 = np.array([[1, 0], [0, 0]], dtype=complex)
    projector_1 = np.array([[0, 0], [0, 1]], dtype=complex)
    return embed_operator(projector_0, num_qubits, control) + embed_operator(
        projector_1, num_qubits, control
    ) @ embed_operator(np.asarray(operator, dtype=complex), num_qubits, target)
