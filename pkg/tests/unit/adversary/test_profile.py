"""Unit tests for predicted and measured contamination profiles."""

import numpy as np
import pytest

from qsl import constants
from qsl.src.adversary.profile import (
    alice_fidelity_floor,
    eve_fidelity_floor,
    measured_profile,
    predicted_profile,
)
from qsl.src.adversary.strategies.general_probe import GeneralProbe
from qsl.src.adversary.strategies.intercept_resend import (
    InterceptResendRandom,
    InterceptResendX,
    InterceptResendZ,
)
from qsl.src.adversary.strategies.none import NoAttack
from qsl.src.adversary.strategies.strategy import (
    AttackConfigurationError,
    ProfileUnavailableError,
)
from qsl.src.adversary.strategies.universal_clone import UniversalClone
from qsl.src.oracle.oracle import OracleSpec


@pytest.fixture(scope="module")
def spec():
    """OR of two bits."""
    return OracleSpec.parse("n=2 m=1 a=0111")


def test_predicted_profile_delegates():
    """Check that the predicted profile comes from the strategy."""
    assert predicted_profile(UniversalClone()).eta_a_test == pytest.approx(1 / 6)
    with pytest.raises(ProfileUnavailableError):
        predicted_profile(GeneralProbe.preset(constants.ProbePreset.CNOT))


def test_measured_profile_without_attack(spec):
    """Check that a passive channel shows no contamination."""
    profile = measured_profile(NoAttack(), spec, 300, np.random.default_rng(0))
    assert profile.eta_a_samples == 0.0
    assert profile.eta_a_test == 0.0
    assert profile.eta_e_samples == 0.0
    assert profile.eve_coverage == 0.0


def test_measured_profile_intercept_z(spec):
    """Check a full Z interception against its prediction."""
    profile = measured_profile(InterceptResendZ(1.0), spec, 2000, np.random.default_rng(1))
    assert profile.eta_a_samples == 0.0
    assert profile.eta_e_samples == 0.0
    assert profile.eve_coverage == 1.0
    assert profile.eta_a_test == pytest.approx(0.5, abs=0.06)


def test_measured_profile_channel_noise(spec):
    """Check that a fully depolarizing channel randomizes Alice's outcomes."""
    profile = measured_profile(
        NoAttack(), spec, 2000, np.random.default_rng(2), channel_shrink=0.0
    )
    assert profile.eta_a_samples == pytest.approx(0.5, abs=0.06)
    assert profile.eta_a_test == pytest.approx(0.5, abs=0.06)


def test_measured_profile_is_deterministic(spec):
    """Check that equal seeds give equal profiles."""
    first = measured_profile(UniversalClone(), spec, 200, np.random.default_rng(9))
    second = measured_profile(UniversalClone(), spec, 200, np.random.default_rng(9))
    assert first == second


def test_measured_profile_rounds(spec):
    """Check that at least one round is required."""
    with pytest.raises(AttackConfigurationError, match="rounds"):
        measured_profile(NoAttack(), spec, 0, np.random.default_rng(0))


@pytest.mark.parametrize(
    "strategy,expected",
    [
        (NoAttack(), 0.0),
        (InterceptResendZ(1.0), 0.5),
        (InterceptResendX(0.4), 0.2),
        (InterceptResendRandom(1.0), 0.25),
        (UniversalClone(), 1 / 6),
        (GeneralProbe.preset(constants.ProbePreset.CNOT), 0.5),
    ],
)
def test_alice_fidelity_floor(strategy, expected):
    """Check the fidelity lower bound on Alice's contamination."""
    assert alice_fidelity_floor(strategy) == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize(
    "strategy,expected",
    [
        (NoAttack(), None),
        (InterceptResendZ(1.0), 0.0),
        (InterceptResendX(1.0), 0.5),
        (UniversalClone(), 1 / 6),
        (GeneralProbe.preset(constants.ProbePreset.CNOT), 0.0),
    ],
)
def test_eve_fidelity_floor(strategy, expected):
    """Check the fidelity lower bound on Eve's contamination."""
    floor = eve_fidelity_floor(strategy)
    if expected is None:
        assert floor is None
    else:
        assert floor == pytest.approx(expected, abs=1e-9)
