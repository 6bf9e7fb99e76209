"""Unit tests for Eve's memory."""

import numpy as np
import pytest

from qsl.src.adversary.memory import EveMemory
from qsl.src.quantum.state import (
    QuantumStateError,
    StateLabel,
    make_state,
    maximally_mixed,
)


@pytest.fixture
def memory():
    """Memory for a two-slot transit."""
    return EveMemory(np.random.default_rng(0), slots=2)


def test_empty_memory(memory):
    """Check the statistics of a fresh memory."""
    assert memory.samples == 0
    assert memory.eta_e_samples == 0.0
    assert memory.coverage == 0.0
    assert memory.retained(0) is None


def test_learning_round_scoring(memory):
    """Check that retained states are read out and scored per slot."""
    memory.begin_round()
    memory.retain(0, make_state(StateLabel.ONE))
    memory.settle(learning=True, ideal_bits=[0, 1])
    assert memory.samples == 1
    assert memory.contaminated == 1
    assert memory.learning_slots == 2
    assert memory.coverage == pytest.approx(0.5)
    assert memory.eta_e_samples == pytest.approx(1.0)
    assert memory.intercepted_rounds == 1


def test_test_rounds_are_not_samples(memory):
    """Check that states kept on test rounds are discarded."""
    memory.begin_round()
    memory.retain(1, make_state(StateLabel.PLUS))
    memory.settle(learning=False, ideal_bits=[0, 0])
    assert memory.samples == 0
    assert memory.learning_slots == 0
    assert memory.intercepted_rounds == 1
    assert memory.retained(1) is None


def test_round_counted_once(memory):
    """Check that several retained slots count as one intercepted round."""
    memory.begin_round()
    memory.retain(0, make_state(StateLabel.ZERO))
    memory.retain(1, make_state(StateLabel.ONE))
    memory.settle(learning=True, ideal_bits=[0, 1])
    assert memory.intercepted_rounds == 1
    assert memory.samples == 2
    assert memory.contaminated == 0
    assert memory.coverage == 1.0


def test_retain_validation(memory):
    """Check slot range and state size."""
    with pytest.raises(QuantumStateError, match="out of range"):
        memory.retain(2, make_state(StateLabel.ZERO))
    with pytest.raises(QuantumStateError, match="single-qubit"):
        memory.retain(0, maximally_mixed(2))
