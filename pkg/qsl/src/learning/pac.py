"""PAC success-rate experiments under label-flip noise."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.stats import binomtest, mannwhitneyu

from qsl import constants
from qsl.src.bounds.bounds import PacParams
from qsl.src.learning.erm import erm_from_counts, generalization_error
from qsl.src.learning.hypothesis import HypothesisClass
from qsl.src.learning.samples import LearningError, SampleSet
from qsl.src.oracle.oracle import ClassicalInput, OracleSpec, truth_table_array
from qsl.utils.parallel import ordered_map
from qsl.utils.seeding import trial_rng

logger = logging.getLogger(__name__)

# success when the exact error is at most epsilon, up to float rounding
ERROR_TOLERANCE = 1e-12


@dataclass(frozen=True)
class PacSummary:
    """Outcome of a PAC success-rate experiment.

    Attributes:
        trials: number of independent learning runs
        successes: runs whose exact error is at most epsilon
        success_rate: successes / trials
        floor: the 1 - delta guarantee
        p_value: one-sided binomial test of "true rate < floor"
        meets_floor: the test does not reject the floor at the configured significance
        mean_error: mean exact error over the runs
        std_error: standard error of success_rate
    """

    trials: int
    successes: int
    success_rate: float
    floor: float
    p_value: float
    meets_floor: bool
    mean_error: float
    std_error: float


def noisy_uniform_samples(
    spec: OracleSpec,
    count: int,
    eta: float,
    rng: np.random.Generator,
    label_index: int = 0,
) -> SampleSet:
    """Draw uniform inputs labelled by the concept, each label flipped with probability eta."""
    if count < 0:
        raise LearningError(f"sample count must be >= 0, got {count}")
    if not 0 <= eta <= 1:
        raise LearningError(f"flip probability must be within [0, 1], got {eta}")
    inputs = rng.integers(2**spec.n, size=count)
    flips = rng.random(count) < eta
    labels = truth_table_array(spec)[inputs, label_index] ^ flips
    samples = SampleSet()
    for value, label, flipped in zip(inputs, labels, flips):
        samples.add(ClassicalInput.from_int(int(value), spec.n), (int(label),), bool(flipped))
    return samples


def _trial_error(
    hclass: HypothesisClass,
    spec: OracleSpec,
    eta: float,
    m_samples: int,
    rng: np.random.Generator,
) -> float:
    size = 2**spec.n
    inputs = rng.integers(size, size=m_samples)
    flips = rng.random(m_samples) < eta
    labels = truth_table_array(spec)[inputs, 0] ^ flips
    counts_1 = np.bincount(inputs[labels == 1], minlength=size)
    counts_0 = np.bincount(inputs[labels == 0], minlength=size)
    index, _ = erm_from_counts(hclass, counts_0, counts_1)
    return generalization_error(hclass.coefficients(index), spec)


def learner_errors(
    p: PacParams,
    spec: OracleSpec,
    eta: float,
    m_samples: int,
    trials: int,
    rng: np.random.Generator,
    progress: bool = False,
) -> np.ndarray:
    """Exact errors of ERM over independent noisy sample sets, one per trial.

    The class is the degree-capped class over spec.n bits with |H| = p.h_size.
    With m_samples = 0 every trial returns the zero hypothesis.
    """
    if trials < 1:
        raise LearningError(f"trials must be >= 1, got {trials}")
    if m_samples < 0:
        raise LearningError(f"sample count must be >= 0, got {m_samples}")
    if not 0 <= eta <= 1:
        raise LearningError(f"flip probability must be within [0, 1], got {eta}")
    hclass = HypothesisClass.with_size(spec.n, p.h_size)
    # touch the cached tables before threads share the class
    hclass.truth_tables  # pylint: disable=pointless-statement
    master_seed = int(rng.integers(2**63))

    def run(index: int) -> float:
        return _trial_error(hclass, spec, eta, m_samples, trial_rng(master_seed, index))

    errors = ordered_map(run, range(trials), "pac trials" if progress else None)
    return np.array(errors, dtype=float)


def pac_success_rate(
    p: PacParams,
    spec: OracleSpec,
    eta: float,
    m_samples: int,
    trials: int,
    rng: np.random.Generator,
) -> float:
    """Fraction of trials whose learned hypothesis is epsilon-close to the concept."""
    errors = learner_errors(p, spec, eta, m_samples, trials, rng)
    return float(np.mean(errors <= p.epsilon + ERROR_TOLERANCE))


def summarize_pac(p: PacParams, errors: np.ndarray) -> PacSummary:
    """Test the observed success count against the 1 - delta floor."""
    trials = len(errors)
    if not trials:
        raise LearningError("cannot summarize an experiment without trials")
    successes = int(np.sum(errors <= p.epsilon + ERROR_TOLERANCE))
    floor = 1 - p.delta
    rate = successes / trials
    test = binomtest(successes, trials, floor, alternative="less")
    return PacSummary(
        trials=trials,
        successes=successes,
        success_rate=rate,
        floor=floor,
        p_value=float(test.pvalue),
        meets_floor=bool(test.pvalue >= constants.PAC_TEST_SIGNIFICANCE),
        mean_error=float(np.mean(errors)),
        std_error=float(np.sqrt(rate * (1 - rate) / trials)),
    )


def compare_error_distributions(first: np.ndarray, second: np.ndarray) -> float:
    """Two-sided Mann-Whitney p-value of two learner error samples.

    Identical constant samples are indistinguishable and get p = 1.
    """
    if not len(first) or not len(second):
        raise LearningError("both error samples must be nonempty")
    if np.unique(np.concatenate([first, second])).size == 1:
        return 1.0
    return float(mannwhitneyu(first, second, alternative="two-sided").pvalue)
