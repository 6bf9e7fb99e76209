"""Density operators on a small register of qubits.

Qubit 0 is the most significant factor of the tensor product, so the
computational basis index of a register reads left to right from qubit 0.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from functools import cache, reduce

import numpy as np

from qsl import constants

logger = logging.getLogger(__name__)


class QuantumStateError(ValueError):
    """Quantum state or operation argument is invalid."""


class StateLabel(StrEnum):
    """The four single-qubit states Alice prepares."""

    ZERO = "Zero"
    ONE = "One"
    PLUS = "Plus"
    MINUS = "Minus"


class Basis(StrEnum):
    """Measurement bases."""

    Z = "Z"
    X = "X"


_SQRT_HALF = 1 / np.sqrt(2)

# basis vectors indexed by basis and outcome bit
_BASIS_VECTORS: dict[Basis, tuple[np.ndarray, np.ndarray]] = {
    Basis.Z: (np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)),
    Basis.X: (
        np.array([_SQRT_HALF, _SQRT_HALF], dtype=complex),
        np.array([_SQRT_HALF, -_SQRT_HALF], dtype=complex),
    ),
}

_LABEL_VECTORS: dict[StateLabel, np.ndarray] = {
    StateLabel.ZERO: _BASIS_VECTORS[Basis.Z][0],
    StateLabel.ONE: _BASIS_VECTORS[Basis.Z][1],
    StateLabel.PLUS: _BASIS_VECTORS[Basis.X][0],
    StateLabel.MINUS: _BASIS_VECTORS[Basis.X][1],
}


def label_basis(label: StateLabel) -> Basis:
    """Return the basis the labelled state is an eigenstate of."""
    return Basis.Z if label in (StateLabel.ZERO, StateLabel.ONE) else Basis.X


def label_bit(label: StateLabel) -> int:
    """Return the outcome bit that identifies the labelled state in its basis."""
    return 0 if label in (StateLabel.ZERO, StateLabel.PLUS) else 1


def label_for(basis: Basis, bit: int) -> StateLabel:
    """Return the state label of an eigenstate given its basis and bit."""
    if basis == Basis.Z:
        return StateLabel.ONE if bit else StateLabel.ZERO
    return StateLabel.MINUS if bit else StateLabel.PLUS


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Density operator on 1 to 8 qubits.

    The matrix is copied and frozen on construction, and the structural
    invariants (Hermiticity, unit trace, positive semidefiniteness) are
    checked within `constants.STATE_TOLERANCE`.
    """

    num_qubits: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        """Validate the density operator."""
        if not 1 <= self.num_qubits <= constants.MAX_QUBITS:
            raise QuantumStateError(
                f"number of qubits must be within 1..{constants.MAX_QUBITS}, "
                f"got {self.num_qubits}"
            )
        dim = 2**self.num_qubits
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.shape != (dim, dim):
            raise QuantumStateError(
                f"expected {dim}x{dim} matrix for {self.num_qubits} qubit(s), "
                f"got shape {matrix.shape}"
            )
        tol = constants.STATE_TOLERANCE
        if not np.allclose(matrix, matrix.conj().T, rtol=0, atol=tol):
            raise QuantumStateError("density operator is not Hermitian")
        if abs(np.trace(matrix) - 1) > tol:
            raise QuantumStateError(
                f"density operator trace must be 1, got {np.trace(matrix).real}"
            )
        if np.linalg.eigvalsh(matrix).min() < -tol:
            raise QuantumStateError("density operator has a negative eigenvalue")
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def trusted(cls, num_qubits: int, matrix: np.ndarray) -> "QuantumState":
        """Wrap the result of a trace-preserving map applied to a valid state.

        Skips the eigenvalue check, which dominates the cost of long sessions.
        """
        state = object.__new__(cls)
        frozen = np.array(matrix, dtype=complex)
        frozen.flags.writeable = False
        object.__setattr__(state, "num_qubits", num_qubits)
        object.__setattr__(state, "matrix", frozen)
        return state

    @property
    def dim(self) -> int:
        """Return the Hilbert space dimension."""
        return 2**self.num_qubits

    def purity(self) -> float:
        """Return tr(rho^2)."""
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def is_pure(self) -> bool:
        """Check whether the state is pure within tolerance."""
        return self.purity() >= 1 - constants.STATE_TOLERANCE

    def __repr__(self) -> str:
        """Return a compact representation."""
        return f"QuantumState(num_qubits={self.num_qubits}, purity={self.purity():.6f})"


def from_vector(vector: Sequence[complex] | np.ndarray) -> QuantumState:
    """Build the pure density operator of a state vector, normalizing it."""
    psi = np.asarray(vector, dtype=complex)
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise QuantumStateError("state vector must be nonzero")
    num_qubits = int(np.log2(psi.size))
    if 2**num_qubits != psi.size:
        raise QuantumStateError(f"vector length {psi.size} is not a power of two")
    psi = psi / norm
    return QuantumState(num_qubits, np.outer(psi, psi.conj()))


@cache
def make_state(label: StateLabel) -> QuantumState:
    """Return the single-qubit state Alice prepares for the label."""
    return from_vector(_LABEL_VECTORS[StateLabel(label)])


def maximally_mixed(num_qubits: int = 1) -> QuantumState:
    """Return I/2^n."""
    dim = 2**num_qubits
    return QuantumState(num_qubits, np.eye(dim, dtype=complex) / dim)


def tensor(states: Iterable[QuantumState]) -> QuantumState:
    """Kronecker product of states; the first state becomes qubit 0."""
    states = list(states)
    if not states:
        raise QuantumStateError("tensor product of an empty sequence")
    total = sum(s.num_qubits for s in states)
    if total > constants.MAX_QUBITS:
        raise QuantumStateError(
            f"tensor product has {total} qubits, at most {constants.MAX_QUBITS} allowed"
        )
    matrix = reduce(np.kron, (s.matrix for s in states))
    return QuantumState.trusted(total, matrix)


def partial_trace(state: QuantumState, keep: Iterable[int]) -> QuantumState:
    """Trace out every qubit not listed in keep.

    The kept qubits appear in ascending index order in the result.
    """
    kept = sorted(set(keep))
    if not kept:
        raise QuantumStateError("partial trace must keep at least one qubit")
    for q in kept:
        _check_target(state, q)
    n = state.num_qubits
    if len(kept) == n:
        return state
    traced = [q for q in range(n) if q not in kept]
    tensor_form = state.matrix.reshape([2] * (2 * n))
    current = n
    # row axes come first, so tracing from the highest index keeps lower ones in place
    for q in reversed(traced):
        tensor_form = np.trace(tensor_form, axis1=q, axis2=q + current)
        current -= 1
    dim = 2 ** len(kept)
    return QuantumState.trusted(len(kept), tensor_form.reshape(dim, dim))


def embed_operator(operator: np.ndarray, num_qubits: int, target: int) -> np.ndarray:
    """Lift an operator on qubits target.. onto the whole register."""
    span = int(np.log2(operator.shape[0]))
    if target < 0 or target + span > num_qubits:
        raise QuantumStateError(
            f"operator on {span} qubit(s) at index {target} does not fit "
            f"a {num_qubits}-qubit register"
        )
    left = np.eye(2**target, dtype=complex)
    right = np.eye(2 ** (num_qubits - target - span), dtype=complex)
    return np.kron(np.kron(left, operator), right)


def fidelity(rho: QuantumState, sigma: QuantumState) -> float:
    """Jozsa fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2."""
    if rho.num_qubits != sigma.num_qubits:
        raise QuantumStateError(
            f"fidelity of states on {rho.num_qubits} and {sigma.num_qubits} qubits"
        )
    if rho.is_pure() or sigma.is_pure():
        # <psi|sigma|psi> is exact and avoids square roots of near-zero eigenvalues
        value = float(np.real(np.trace(rho.matrix @ sigma.matrix)))
    else:
        eigenvalues, vectors = np.linalg.eigh(rho.matrix)
        sqrt_rho = (vectors * np.sqrt(np.clip(eigenvalues, 0, None))) @ vectors.conj().T
        inner = np.linalg.eigvalsh(sqrt_rho @ sigma.matrix @ sqrt_rho)
        value = float(np.sum(np.sqrt(np.clip(inner, 0, None))) ** 2)
    return min(1.0, max(0.0, value))


def states_equal(rho: QuantumState, sigma: QuantumState) -> bool:
    """Compare states through fidelity, ignoring global phase."""
    return (
        rho.num_qubits == sigma.num_qubits
        and fidelity(rho, sigma) >= 1 - constants.STATE_EQUALITY_TOLERANCE
    )


def _check_target(state: QuantumState, target: int) -> None:
    if not 0 <= target < state.num_qubits:
        raise QuantumStateError(
            f"qubit index {target} out of range for {state.num_qubits} qubit(s)"
        )


def _projectors(
    state: QuantumState, basis: Basis, target: int
) -> tuple[np.ndarray, np.ndarray]:
    _check_target(state, target)
    return _register_projectors(state.num_qubits, Basis(basis), target)


@cache
def _register_projectors(
    num_qubits: int, basis: Basis, target: int
) -> tuple[np.ndarray, np.ndarray]:
    zero, one = (
        embed_operator(np.outer(v, v.conj()), num_qubits, target)
        for v in _BASIS_VECTORS[basis]
    )
    return zero, one


def outcome_probabilities(
    state: QuantumState, basis: Basis, target: int = 0
) -> tuple[float, float]:
    """Born-rule probabilities of outcomes 0 and 1 without sampling."""
    projector_0, _ = _projectors(state, basis, target)
    p0 = min(1.0, max(0.0, float(np.real(np.trace(projector_0 @ state.matrix)))))
    return p0, 1.0 - p0


def measure(
    state: QuantumState, basis: Basis, target: int, rng: np.random.Generator
) -> tuple[int, QuantumState]:
    """Measure one qubit and return the outcome and the collapsed state."""
    projectors = _projectors(state, basis, target)
    p0 = min(
        1.0, max(0.0, float(np.real(np.trace(projectors[0] @ state.matrix))))
    )
    outcome = 0 if rng.random() < p0 else 1
    probability = p0 if outcome == 0 else 1.0 - p0
    projector = projectors[outcome]
    post = projector @ state.matrix @ projector / probability
    # restore exact Hermiticity lost to rounding
    post = (post + post.conj().T) / 2
    return outcome, QuantumState.trusted(state.num_qubits, post / np.trace(post).real)


_PAULIS = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def depolarize(
    state: QuantumState, shrink: float, target: int | None = None
) -> QuantumState:
    """Shrink the Bloch vector by the given factor.

    Without a target the state must be a single qubit and maps to
    s*rho + (1-s)*I/2. With a target the same channel acts on that qubit of a
    larger register in its Pauli-twirl form.
    """
    if not 0.0 <= shrink <= 1.0:
        raise QuantumStateError(f"shrink must be within [0, 1], got {shrink}")
    if target is None:
        if state.num_qubits != 1:
            raise QuantumStateError(
                "depolarizing a multi-qubit state requires a target qubit"
            )
        matrix = shrink * state.matrix + (1 - shrink) * np.eye(2) / 2
        return QuantumState.trusted(1, matrix)
    _check_target(state, target)
    twirl = sum(
        embed_operator(p, state.num_qubits, target)
        @ state.matrix
        @ embed_operator(p, state.num_qubits, target).conj().T
        for p in _PAULIS
    )
    matrix = (1 + 3 * shrink) / 4 * state.matrix + (1 - shrink) / 4 * twirl
    return QuantumState.trusted(state.num_qubits, matrix)
