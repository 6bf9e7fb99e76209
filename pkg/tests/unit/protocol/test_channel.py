"""Unit tests for one protocol round through the channel."""

import numpy as np
import pytest

from qsl.src.adversary.memory import EveMemory
from qsl.src.adversary.strategies.intercept_resend import InterceptResendZ
from qsl.src.adversary.strategies.none import NoAttack
from qsl.src.oracle.oracle import ClassicalInput, OracleSpec, reed_muller_eval
from qsl.src.protocol.channel import collect_learning_samples, run_round
from qsl.src.protocol.rounds import PreparedRound, RoundKind, alice_prepare_round
from qsl.src.quantum.state import StateLabel


@pytest.fixture(scope="module")
def spec():
    """OR of two bits."""
    return OracleSpec.parse("n=2 m=1 a=0111")


@pytest.fixture
def memory():
    """One-slot memory with its own stream."""
    return EveMemory(np.random.default_rng(100), slots=1)


def test_learning_round(spec, memory):
    """Check that a faithful learning round yields the concept value."""
    prepared = PreparedRound(RoundKind.LEARNING, ClassicalInput.parse("10"), (StateLabel.ONE,))
    result = run_round(prepared, spec, NoAttack(), memory, np.random.default_rng(0))
    assert result.outcomes == (0,)
    assert result.expected == (0,)
    assert result.mismatches == (False,)
    assert result.mismatch_count == 0
    assert result.sample_labels == (1,)


def test_test_round(spec, memory):
    """Check that a faithful test round returns the prepared X state."""
    prepared = PreparedRound(RoundKind.TEST, ClassicalInput.parse("01"), (StateLabel.MINUS,))
    result = run_round(prepared, spec, NoAttack(), memory, np.random.default_rng(0))
    assert result.outcomes == (1,)
    assert result.mismatch_count == 0


def test_faithful_rounds_never_mismatch(spec, memory):
    """Check that a passive channel gives the ideal outcome on every round."""
    rng = np.random.default_rng(4)
    for _ in range(200):
        prepared = alice_prepare_round(rng, frozenset(), spec.n)
        result = run_round(prepared, spec, NoAttack(), memory, rng)
        assert result.mismatch_count == 0
        if result.kind == RoundKind.LEARNING:
            assert result.sample_labels == (reed_muller_eval(spec, 0, result.input),)


def test_interception_disturbs_test_rounds(spec, memory):
    """Check that a Z interception flips about half of the test outcomes."""
    rng = np.random.default_rng(8)
    prepared = PreparedRound(RoundKind.TEST, ClassicalInput.parse("11"), (StateLabel.PLUS,))
    mismatches = sum(
        run_round(prepared, spec, InterceptResendZ(1.0), memory, rng).mismatch_count
        for _ in range(400)
    )
    assert 140 < mismatches < 260
    assert memory.samples == 0
    assert memory.intercepted_rounds == 400


def test_two_label_round():
    """Check that every label slot is measured and compared."""
    spec = OracleSpec.parse("n=2 m=2 a=0111,0001")
    two_slot_memory = EveMemory(np.random.default_rng(1), slots=2)
    prepared = PreparedRound(
        RoundKind.LEARNING, ClassicalInput.parse("11"), (StateLabel.ZERO, StateLabel.ONE)
    )
    result = run_round(prepared, spec, NoAttack(), two_slot_memory, np.random.default_rng(2))
    assert result.outcomes == (1, 0)
    assert result.sample_labels == (1, 1)
    assert result.mismatch_count == 0


def test_collect_learning_samples(spec):
    """Check that only learning rounds become samples."""
    samples = collect_learning_samples(spec, NoAttack(), 60, np.random.default_rng(3))
    assert len(samples) == 60
    assert samples.contaminated_count == 0
    for sample in samples:
        assert sample.labels == (reed_muller_eval(spec, 0, sample.input),)
