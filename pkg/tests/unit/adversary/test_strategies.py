"""Unit tests for the built-in attack strategies."""

import numpy as np
import pytest

from qsl import constants
from qsl.src.adversary.memory import EveMemory
from qsl.src.adversary.strategies.general_probe import GeneralProbe, probe_unitary
from qsl.src.adversary.strategies.intercept_resend import (
    InterceptResendRandom,
    InterceptResendX,
    InterceptResendZ,
    dephase,
)
from qsl.src.adversary.strategies.none import NoAttack
from qsl.src.adversary.strategies.strategy import (
    AttackConfigurationError,
    Direction,
    ProfileUnavailableError,
    eve_interpose,
)
from qsl.src.adversary.strategies.universal_clone import UniversalClone
from qsl.src.quantum.state import (
    Basis,
    StateLabel,
    fidelity,
    label_basis,
    make_state,
    maximally_mixed,
    partial_trace,
    states_equal,
    tensor,
)


def label_basis_of(state):
    """Return the basis the state is an eigenstate of."""
    for label in StateLabel:
        if states_equal(state, make_state(label)):
            return label_basis(label)
    return None


@pytest.fixture
def rng():
    """Eve's random stream."""
    return np.random.default_rng(11)


@pytest.fixture
def memory(rng):
    """One-slot memory."""
    return EveMemory(rng, slots=1)


@pytest.mark.parametrize(
    "strategy,expected",
    [
        (NoAttack(), (0.0, 0.0, 0.0, 0.0)),
        (InterceptResendZ(1.0), (0.0, 0.5, 0.0, 1.0)),
        (InterceptResendZ(0.4), (0.0, 0.2, 0.0, 0.4)),
        (InterceptResendX(1.0), (0.5, 0.0, 0.5, 1.0)),
        (InterceptResendX(0.2), (0.1, 0.0, 0.5, 0.2)),
        (InterceptResendRandom(1.0), (0.25, 0.25, 0.25, 1.0)),
        (InterceptResendRandom(0.6), (0.15, 0.15, 0.25, 0.6)),
        (UniversalClone(), (1 / 6, 1 / 6, 1 / 6, 1.0)),
    ],
)
def test_predicted_profiles(strategy, expected):
    """Check the closed-form contamination of every family."""
    profile = strategy.predicted_profile()
    observed = (
        profile.eta_a_samples,
        profile.eta_a_test,
        profile.eta_e_samples,
        profile.eve_coverage,
    )
    assert observed == pytest.approx(expected)


def test_general_probe_has_no_closed_form():
    """Check that probes must be measured instead."""
    with pytest.raises(ProfileUnavailableError, match="measured_profile"):
        GeneralProbe.preset(constants.ProbePreset.CNOT).predicted_profile()


@pytest.mark.parametrize("p", [-0.1, 1.1])
def test_interception_probability_range(p):
    """Check that the interception probability is a probability."""
    with pytest.raises(AttackConfigurationError, match="interception probability"):
        InterceptResendZ(p)


def test_no_attack_forwards_untouched(memory, rng):
    """Check that the passive channel neither changes nor keeps anything."""
    transit = make_state(StateLabel.PLUS)
    assert NoAttack().interpose(Direction.B_TO_A, transit, memory, rng) is transit
    assert memory.retained(0) is None
    assert NoAttack().retained_state(transit) is None


def test_intercept_ignores_outbound_leg(memory, rng):
    """Check that built-in interceptors act on the B->A leg only."""
    transit = make_state(StateLabel.PLUS)
    forwarded = InterceptResendZ(1.0).interpose(Direction.A_TO_B, transit, memory, rng)
    assert forwarded is transit
    assert memory.retained(0) is None


def test_intercept_z_on_z_state(memory, rng):
    """Check that a right-basis interception is invisible and informative."""
    transit = make_state(StateLabel.ONE)
    forwarded = InterceptResendZ(1.0).interpose(Direction.B_TO_A, transit, memory, rng)
    assert states_equal(forwarded, transit)
    assert states_equal(memory.retained(0), transit)


def test_intercept_x_on_z_state(memory, rng):
    """Check that a wrong-basis interception resends an X eigenstate."""
    transit = make_state(StateLabel.ZERO)
    forwarded = InterceptResendX(1.0).interpose(Direction.B_TO_A, transit, memory, rng)
    assert label_basis_of(forwarded) == Basis.X
    assert states_equal(memory.retained(0), forwarded)


def test_intercept_probability_zero_never_touches(memory, rng):
    """Check that p = 0 forwards every transit untouched."""
    strategy = InterceptResendRandom(0.0)
    for _ in range(20):
        memory.begin_round()
        transit = make_state(StateLabel.MINUS)
        assert strategy.interpose(Direction.B_TO_A, transit, memory, rng) is transit
    assert memory.intercepted_rounds == 0


def test_intercept_every_slot():
    """Check that all label slots of an intercepted round are measured."""
    memory = EveMemory(np.random.default_rng(5), slots=2)
    transit = tensor([make_state(StateLabel.ZERO), make_state(StateLabel.ONE)])
    InterceptResendZ(1.0).interpose(Direction.B_TO_A, transit, memory, memory.rng)
    assert states_equal(memory.retained(0), make_state(StateLabel.ZERO))
    assert states_equal(memory.retained(1), make_state(StateLabel.ONE))


def test_dephase():
    """Check the non-selective measurement channel."""
    plus = make_state(StateLabel.PLUS)
    assert np.allclose(dephase(plus, Basis.Z).matrix, maximally_mixed().matrix)
    assert states_equal(dephase(plus, Basis.X), plus)


def test_intercept_delivered_state():
    """Check the expected channel of a partial Z interception."""
    plus = make_state(StateLabel.PLUS)
    delivered = InterceptResendZ(0.4).delivered_state(plus)
    assert fidelity(plus, delivered) == pytest.approx(0.8)
    zero = make_state(StateLabel.ZERO)
    assert fidelity(zero, InterceptResendZ(0.4).delivered_state(zero)) == pytest.approx(1.0)


def test_universal_clone_interpose(memory, rng):
    """Check that the cloner forwards and keeps a 5/6 clone."""
    transit = make_state(StateLabel.MINUS)
    forwarded = UniversalClone().interpose(Direction.B_TO_A, transit, memory, rng)
    assert fidelity(transit, forwarded) == pytest.approx(5 / 6)
    assert fidelity(transit, memory.retained(0)) == pytest.approx(5 / 6)
    assert UniversalClone().interpose(Direction.A_TO_B, transit, memory, rng) is transit


def test_probe_presets():
    """Check the preset probe unitaries."""
    unitary, ancilla = probe_unitary(constants.ProbePreset.IDENTITY)
    assert ancilla == 1
    assert np.allclose(unitary, np.eye(4))
    unitary, ancilla = probe_unitary(constants.ProbePreset.CNOT, transit_qubits=3)
    assert ancilla == constants.MAX_PROBE_ANCILLA_QUBITS
    assert unitary.shape == (32, 32)
    rotation, _ = probe_unitary(constants.ProbePreset.CONTROLLED_RY, theta=0.0)
    assert np.allclose(rotation, np.eye(4))


def test_cnot_probe_copies_z_and_destroys_x():
    """Check the CNOT probe on both bases."""
    probe = GeneralProbe.preset(constants.ProbePreset.CNOT)
    one = make_state(StateLabel.ONE)
    plus = make_state(StateLabel.PLUS)
    assert states_equal(probe.delivered_state(one), one)
    assert states_equal(probe.retained_state(one), one)
    assert np.allclose(probe.delivered_state(plus).matrix, maximally_mixed().matrix)
    assert probe.label == "general_probe/cnot"
    assert probe.parameter is None


def test_cnot_attack_acts_on_return_leg_only(memory, rng):
    """Check that the CNOT attack passes the outbound transit and entangles the return."""
    probe = GeneralProbe.preset(constants.ProbePreset.CNOT)
    plus = make_state(StateLabel.PLUS)
    assert probe.interpose(Direction.A_TO_B, plus, memory, rng) is plus
    assert memory.retained(0) is None
    forwarded = probe.interpose(Direction.B_TO_A, plus, memory, rng)
    assert np.allclose(forwarded.matrix, maximally_mixed().matrix)
    assert memory.retained(0) is not None


def test_controlled_ry_probe():
    """Check that a half-turn rotation behaves like the CNOT probe on Z states."""
    probe = GeneralProbe.preset(constants.ProbePreset.CONTROLLED_RY, theta=np.pi)
    one = make_state(StateLabel.ONE)
    assert states_equal(probe.retained_state(one), one)
    assert probe.parameter == pytest.approx(np.pi)
    assert repr(probe) == "GeneralProbe(3.14159)"


def test_probe_interpose(memory, rng):
    """Check that the probe keeps its ancilla and forwards the transit."""
    probe = GeneralProbe.preset(constants.ProbePreset.CNOT)
    transit = make_state(StateLabel.ZERO)
    forwarded = probe.interpose(Direction.B_TO_A, transit, memory, rng)
    assert states_equal(forwarded, transit)
    assert states_equal(memory.retained(0), transit)


def test_probe_on_two_label_transit():
    """Check that every label slot gets its own ancilla qubit."""
    probe = GeneralProbe.preset(constants.ProbePreset.CNOT, transit_qubits=2)
    memory = EveMemory(np.random.default_rng(2), slots=2)
    transit = tensor([make_state(StateLabel.ONE), make_state(StateLabel.ZERO)])
    forwarded = probe.interpose(Direction.B_TO_A, transit, memory, memory.rng)
    assert states_equal(forwarded, transit)
    assert states_equal(memory.retained(0), make_state(StateLabel.ONE))
    assert states_equal(memory.retained(1), make_state(StateLabel.ZERO))
    assert states_equal(partial_trace(forwarded, [0]), make_state(StateLabel.ONE))


def test_probe_validation():
    """Check that probes must be unitary and leave room for the transit."""
    with pytest.raises(AttackConfigurationError, match="invalid probe"):
        GeneralProbe(np.ones((4, 4)))
    with pytest.raises(AttackConfigurationError, match="no room"):
        GeneralProbe(np.eye(2), ancilla_qubits=1)
    with pytest.raises(AttackConfigurationError, match="ancilla"):
        GeneralProbe(np.eye(16), ancilla_qubits=3)
    probe = GeneralProbe.preset(constants.ProbePreset.CNOT)
    with pytest.raises(AttackConfigurationError, match="1-qubit transit"):
        probe.delivered_state(maximally_mixed(2))


def test_eve_interpose_checks_slots(memory, rng):
    """Check that the transit must match the memory size."""
    with pytest.raises(AttackConfigurationError, match="slot"):
        eve_interpose(NoAttack(), Direction.B_TO_A, maximally_mixed(2), memory, rng)


def test_describe():
    """Check the JSON descriptor of strategies."""
    assert InterceptResendX(0.5).describe() == {"strategy": "intercept_x", "parameter": 0.5}
    assert NoAttack().describe() == {"strategy": "none", "parameter": None}
    assert repr(InterceptResendZ(0.25)) == "InterceptResendZ(0.25)"
    assert repr(UniversalClone()) == "UniversalClone()"
