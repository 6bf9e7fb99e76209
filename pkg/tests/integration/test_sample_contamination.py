"""Integration tests of the label contamination attacks leave in Alice's samples."""

import numpy as np
import pytest

from qsl.src.adversary.profile import predicted_profile
from qsl.src.adversary.strategies.intercept_resend import (
    InterceptResendRandom,
    InterceptResendX,
    InterceptResendZ,
)
from qsl.src.adversary.strategies.none import NoAttack
from qsl.src.adversary.strategies.universal_clone import UniversalClone
from qsl.src.bounds.bounds import PacParams
from qsl.src.learning.erm import erm_learn
from qsl.src.learning.hypothesis import HypothesisClass
from qsl.src.learning.pac import compare_error_distributions, learner_errors
from qsl.src.oracle.oracle import OracleSpec
from qsl.src.protocol.channel import collect_learning_samples
from qsl.src.protocol.session import SessionStatus, run_session
from qsl.src.protocol.session_config import SessionConfig
from qsl.utils.seeding import trial_rng

PARAMS = PacParams(epsilon=0.1, delta=0.1, h_size=16)


@pytest.fixture(scope="module")
def or_oracle():
    """OR of two bits."""
    return OracleSpec.parse("n=2 m=1 a=0111")


@pytest.mark.slow
def test_cloned_samples_learn_like_label_flip_noise(or_oracle):
    """Check that samples through the cloner train ERM like 1/6 label-flip noise."""
    hclass = HypothesisClass.with_size(or_oracle.n, PARAMS.h_size)
    trials = 40
    m_samples = 30
    cloned_errors = []
    contaminated = 0
    for index in range(trials):
        samples = collect_learning_samples(
            or_oracle, UniversalClone(), m_samples, trial_rng(77, index)
        )
        contaminated += samples.contaminated_count
        cloned_errors.append(erm_learn(samples, hclass, or_oracle).exact_error)
    flip_errors = learner_errors(
        PARAMS, or_oracle, 1 / 6, m_samples, trials, np.random.default_rng(78)
    )

    assert contaminated / (trials * m_samples) == pytest.approx(1 / 6, abs=0.04)
    p_value = compare_error_distributions(np.array(cloned_errors), flip_errors)
    assert p_value >= 0.05


@pytest.mark.slow
@pytest.mark.parametrize(
    "attack",
    [
        NoAttack(),
        InterceptResendZ(0.6),
        InterceptResendX(0.6),
        InterceptResendRandom(1.0),
        InterceptResendRandom(0.5),
        UniversalClone(),
    ],
)
def test_session_sample_contamination_matches_prediction(or_oracle, attack):
    """Check the ground-truth contamination of a completed session's samples."""
    # eta_c high enough that R.1 lets every listed attack through
    session = SessionConfig(pac=PARAMS, eta_c=0.45, target_samples=3000, seed=17)
    outcome = run_session(session, or_oracle, attack)

    assert outcome.status == SessionStatus.COMPLETED
    assert len(outcome.samples) >= 3000
    expected = predicted_profile(attack).eta_a_samples
    assert outcome.samples.contamination_rate == pytest.approx(expected, abs=0.03)
