"""Unit tests for the universal cloner."""

import pytest

from qsl import constants
from qsl.src.quantum.cloner import clone_register, universal_clone
from qsl.src.quantum.state import (
    QuantumStateError,
    StateLabel,
    fidelity,
    make_state,
    maximally_mixed,
    partial_trace,
    tensor,
)


@pytest.mark.parametrize("label", list(StateLabel))
def test_clone_fidelity(label):
    """Check that both clones of a protocol state reach fidelity 5/6."""
    state = make_state(label)
    first, second = universal_clone(state)
    assert fidelity(state, first) == pytest.approx(constants.CLONER_FIDELITY, abs=1e-12)
    assert fidelity(state, second) == pytest.approx(constants.CLONER_FIDELITY, abs=1e-12)


def test_clone_of_mixed_state_stays_mixed():
    """Check that the maximally mixed state is a fixed point of the cloner."""
    first, _ = universal_clone(maximally_mixed())
    assert fidelity(first, maximally_mixed()) == pytest.approx(1.0)


def test_clone_single_qubit_only():
    """Check that the cloner refuses registers."""
    with pytest.raises(QuantumStateError, match="single qubit"):
        universal_clone(maximally_mixed(2))


def test_clone_register():
    """Check that every qubit of a register is cloned on its own."""
    zero = make_state(StateLabel.ZERO)
    minus = make_state(StateLabel.MINUS)
    forwarded, kept = clone_register(tensor([zero, minus]))
    assert len(kept) == 2
    assert fidelity(zero, kept[0]) == pytest.approx(5 / 6)
    assert fidelity(minus, kept[1]) == pytest.approx(5 / 6)
    assert fidelity(zero, partial_trace(forwarded, [0])) == pytest.approx(5 / 6)
    assert fidelity(minus, partial_trace(forwarded, [1])) == pytest.approx(5 / 6)


def test_clone_register_of_one_qubit():
    """Check that a one-qubit register is cloned like a single state."""
    forwarded, kept = clone_register(make_state(StateLabel.PLUS))
    assert forwarded.num_qubits == 1
    assert len(kept) == 1
