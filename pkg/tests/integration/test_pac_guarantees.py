"""Integration tests of the PAC guarantees behind the sample complexities."""

import numpy as np
import pytest

from qsl.src.bounds.bounds import (
    PacParams,
    sample_complexity_noiseless,
    sample_complexity_noisy,
)
from qsl.src.learning.pac import learner_errors, summarize_pac
from qsl.src.oracle.oracle import OracleSpec

REFERENCE = PacParams(epsilon=0.1, delta=0.1, h_size=16)


@pytest.fixture(scope="module")
def or_oracle():
    """OR of two bits."""
    return OracleSpec.parse("n=2 m=1 a=0111")


def test_noiseless_guarantee(or_oracle):
    """Check the success floor with the noiseless sample complexity."""
    m_samples = sample_complexity_noiseless(REFERENCE)
    assert m_samples == 51
    errors = learner_errors(REFERENCE, or_oracle, 0.0, m_samples, 500, np.random.default_rng(5))
    summary = summarize_pac(REFERENCE, errors)
    assert summary.success_rate >= 0.9
    assert summary.meets_floor


@pytest.mark.slow
def test_noisy_guarantee(or_oracle):
    """Check the success floor at eta = 1/6 with the matching sample complexity."""
    m_samples = sample_complexity_noisy(REFERENCE, 1 / 6)
    assert m_samples == 2596
    errors = learner_errors(
        REFERENCE, or_oracle, 1 / 6, m_samples, 500, np.random.default_rng(6)
    )
    summary = summarize_pac(REFERENCE, errors)
    assert summary.success_rate >= 0.9
    assert summary.meets_floor


def test_too_few_samples_fail(or_oracle):
    """Check that starving the learner breaks the guarantee."""
    errors = learner_errors(REFERENCE, or_oracle, 0.0, 2, 200, np.random.default_rng(7))
    assert not summarize_pac(REFERENCE, errors).meets_floor
