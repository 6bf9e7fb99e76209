"""Symmetric universal 1->2 qubit cloner in its reduced-state form."""

from qsl import constants
from qsl.src.quantum.state import (
    QuantumState,
    QuantumStateError,
    depolarize,
    partial_trace,
)


def universal_clone(state: QuantumState) -> tuple[QuantumState, QuantumState]:
    """Return the two reduced clones of a single-qubit state.

    Each clone is the input with its Bloch vector shrunk by 2/3, which gives
    fidelity 5/6 with any pure input.
    """
    if state.num_qubits != 1:
        raise QuantumStateError(
            f"universal cloner takes a single qubit, got {state.num_qubits}"
        )
    clone = depolarize(state, constants.CLONER_SHRINK)
    return clone, clone


def clone_register(state: QuantumState) -> tuple[QuantumState, list[QuantumState]]:
    """Clone every qubit of a register independently.

    Returns the forwarded register, where each qubit went through the cloner
    channel, and the reduced single-qubit clones kept by the copier.
    """
    if state.num_qubits == 1:
        forwarded, kept = universal_clone(state)
        return forwarded, [kept]
    forwarded = state
    kept_clones = []
    for target in range(state.num_qubits):
        kept_clones.append(universal_clone(partial_trace(state, [target]))[1])
        forwarded = depolarize(forwarded, constants.CLONER_SHRINK, target)
    return forwarded, kept_clones
