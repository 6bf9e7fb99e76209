"""Exhaustive empirical risk minimization."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from qsl.src.learning.hypothesis import HypothesisClass
from qsl.src.learning.samples import LearningError, SampleSet
from qsl.src.oracle.oracle import (
    OracleSpec,
    coefficients_to_bitstring,
    monomial_matrix,
    truth_table_array,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LearnResult:
    """Hypothesis picked by the learner and its errors.

    Attributes:
        hypothesis: coefficient vector in ascending k order
        empirical_error: fraction of training samples it disagrees with
        exact_error: uniform-distribution error against the hidden concept,
            None when the concept was not supplied
    """

    hypothesis: tuple[int, ...]
    empirical_error: float
    exact_error: Optional[float] = None

    @property
    def bitstring(self) -> str:
        """Hypothesis as a coefficient bitstring."""
        return coefficients_to_bitstring(self.hypothesis)


def erm_from_counts(
    hclass: HypothesisClass, counts_0: np.ndarray, counts_1: np.ndarray
) -> tuple[int, int]:
    """Member index with the fewest disagreements, and that count.

    Args:
        hclass: class to search
        counts_0: per-input count of samples labelled 0, indexed by integer form
        counts_1: per-input count of samples labelled 1

    Returns:
        (index, disagreements); ties go to the smallest index, which is the
        lexicographically smallest coefficient vector.
    """
    hclass.check_enumerable()
    disagreements = hclass.truth_tables @ (counts_0 - counts_1) + int(counts_1.sum())
    index = int(np.argmin(disagreements))
    return index, int(disagreements[index])


def generalization_error(
    hypothesis: tuple[int, ...], spec: OracleSpec, label_index: int = 0
) -> float:
    """Fraction of the 2^n inputs where the hypothesis and the concept disagree."""
    if len(hypothesis) != 2**spec.n:
        raise LearningError(
            f"hypothesis of length {len(hypothesis)} does not fit width {spec.n}"
        )
    if not 0 <= label_index < spec.m:
        raise LearningError(f"oracle has no label {label_index}")
    predicted = (monomial_matrix(spec.n) @ np.array(hypothesis, dtype=np.int64)) % 2
    truth = truth_table_array(spec)[:, label_index]
    return float(np.mean(predicted != truth))


def erm_learn(
    samples: SampleSet,
    hclass: HypothesisClass,
    spec: Optional[OracleSpec] = None,
    label_index: int = 0,
) -> LearnResult:
    """Return the member of hclass that disagrees with the fewest samples.

    Raises:
        LearningError: the sample set is empty or its width differs from the class.
    """
    if not len(samples):
        raise LearningError("cannot learn from an empty sample set")
    if samples.width() != hclass.n:
        raise LearningError(
            f"samples of width {samples.width()} do not fit a class over {hclass.n} bit(s)"
        )
    counts_0, counts_1 = samples.label_counts(label_index)
    index, disagreements = erm_from_counts(hclass, counts_0, counts_1)
    hypothesis = hclass.coefficients(index)
    result = LearnResult(
        hypothesis=hypothesis,
        empirical_error=disagreements / len(samples),
        exact_error=(
            generalization_error(hypothesis, spec, label_index) if spec is not None else None
        ),
    )
    logger.debug(
        "ERM over %d hypotheses and %d samples picked %s",
        hclass.size,
        len(samples),
        result.bitstring,
    )
    return result
