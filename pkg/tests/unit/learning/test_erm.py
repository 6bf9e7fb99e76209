"""Unit tests for exhaustive empirical risk minimization."""

import numpy as np
import pytest

from qsl.src.learning.erm import erm_from_counts, erm_learn, generalization_error
from qsl.src.learning.hypothesis import HypothesisClass
from qsl.src.learning.samples import LearningError, SampleSet
from qsl.src.oracle.oracle import ClassicalInput, OracleSpec, oracle_truth_table


@pytest.fixture(scope="module")
def or_oracle():
    """Binary oracle computing OR of two bits."""
    return OracleSpec.parse("n=2 m=1 a=0111")


@pytest.fixture
def full_table(or_oracle):
    """One correctly labelled sample per input."""
    return SampleSet.from_pairs(oracle_truth_table(or_oracle).items())


def test_erm_recovers_concept(or_oracle, full_table):
    """Check that noiseless full coverage recovers the concept exactly."""
    result = erm_learn(full_table, HypothesisClass(2), or_oracle)
    assert result.hypothesis == (0, 1, 1, 1)
    assert result.bitstring == "0111"
    assert result.empirical_error == 0.0
    assert result.exact_error == 0.0


def test_erm_capped_class_ties(or_oracle, full_table):
    """Check that ties between best members go to the smallest index."""
    result = erm_learn(full_table, HypothesisClass(2, 1), or_oracle)
    # x_2 alone is the first member missing a single input
    assert result.hypothesis == (0, 0, 1, 0)
    assert result.empirical_error == pytest.approx(0.25)
    assert result.exact_error == pytest.approx(0.25)


def test_erm_majority_vote(or_oracle):
    """Check that a minority of flipped labels is outvoted."""
    samples = SampleSet.from_pairs(oracle_truth_table(or_oracle).items())
    samples.add(ClassicalInput.parse("11"), [1])
    samples.add(ClassicalInput.parse("11"), [0], contaminated=True)
    samples.add(ClassicalInput.parse("11"), [1])
    result = erm_learn(samples, HypothesisClass(2), or_oracle)
    assert result.hypothesis == (0, 1, 1, 1)
    assert result.empirical_error == pytest.approx(1 / 7)


def test_erm_without_concept(full_table):
    """Check that the exact error is left out without a concept."""
    assert erm_learn(full_table, HypothesisClass(2)).exact_error is None


def test_erm_from_counts_without_samples():
    """Check that no samples pick the zero hypothesis."""
    zeros = np.zeros(4, dtype=np.int64)
    assert erm_from_counts(HypothesisClass(2), zeros, zeros) == (0, 0)


def test_erm_from_counts():
    """Check the disagreement count of the picked member."""
    counts_0 = np.array([3, 0, 0, 1])
    counts_1 = np.array([0, 2, 2, 0])
    index, disagreements = erm_from_counts(HypothesisClass(2), counts_0, counts_1)
    # the XOR table [0, 1, 1, 0] agrees with every sample
    assert HypothesisClass(2).truth_tables[index].tolist() == [0, 1, 1, 0]
    assert disagreements == 0


def test_generalization_error(or_oracle):
    """Check exact errors against the concept."""
    assert generalization_error((0, 0, 0, 0), or_oracle) == pytest.approx(0.75)
    assert generalization_error((1, 0, 0, 0), or_oracle) == pytest.approx(0.25)
    assert generalization_error((0, 1, 1, 1), or_oracle) == 0.0


def test_generalization_error_checks(or_oracle):
    """Check hypothesis length and label validation."""
    with pytest.raises(LearningError, match="does not fit width"):
        generalization_error((0, 1), or_oracle)
    with pytest.raises(LearningError, match="no label 1"):
        generalization_error((0, 1, 1, 1), or_oracle, 1)


def test_erm_learn_checks(full_table):
    """Check empty sample sets and width mismatches."""
    with pytest.raises(LearningError, match="empty sample set"):
        erm_learn(SampleSet(), HypothesisClass(2))
    with pytest.raises(LearningError, match="do not fit a class"):
        erm_learn(full_table, HypothesisClass(3))


def _scan_disagreements(coefficients, pairs):
    """Count disagreements of one coefficient vector with plain integer arithmetic."""
    wrong = 0
    for value, label in pairs:
        output = 0
        for k, bit in enumerate(coefficients):
            if bit and (k & value) == k:
                output ^= 1
        wrong += output != label
    return wrong


@pytest.mark.parametrize(
    "n,degree_cap",
    [(1, 0), (1, None), (2, 0), (2, 1), (2, None), (3, 0), (3, 1), (3, 2), (3, None)],
)
def test_erm_matches_plain_scan(n, degree_cap):
    """Check ERM against a member-by-member scan with lexicographic tie-breaking."""
    hclass = HypothesisClass(n, degree_cap)
    assert hclass.size <= 256
    members = [hclass.coefficients(i) for i in range(hclass.size)]
    rng = np.random.default_rng(100 + n)
    for _ in range(6):
        count = int(rng.integers(1, 3 * 2**n + 1))
        values = rng.integers(2**n, size=count)
        labels = rng.integers(2, size=count)
        pairs = [(int(v), int(b)) for v, b in zip(values, labels)]
        samples = SampleSet.from_pairs(
            (ClassicalInput.from_int(value, n), label) for value, label in pairs
        )
        scores = [(_scan_disagreements(c, pairs), c) for c in members]
        best_score, best = min(scores)
        result = erm_learn(samples, hclass)
        assert result.hypothesis == best
        assert result.empirical_error == pytest.approx(best_score / count)
