"""One-vs-all reduction of multiclass learning to binary ERM."""

from collections.abc import Sequence
from typing import Optional

import numpy as np

from qsl.src.learning.erm import LearnResult, erm_learn
from qsl.src.learning.hypothesis import HypothesisClass
from qsl.src.learning.samples import LearningError, SampleSet
from qsl.src.oracle.oracle import ClassicalInput, monomial_matrix


def class_index(labels: Sequence[int]) -> int:
    """Class of a label vector: label i is bit i of the index."""
    return sum(int(bit) << i for i, bit in enumerate(labels))


def multilabel_to_classes(samples: SampleSet) -> list[tuple[ClassicalInput, int]]:
    """Turn samples carrying m label bits into (input, class in [0, 2^m)) pairs."""
    return [(sample.input, class_index(sample.labels)) for sample in samples]


def _num_classes(samples: SampleSet) -> int:
    widths = {len(sample.labels) for sample in samples}
    if len(widths) != 1:
        raise LearningError(f"samples mix label counts {sorted(widths)}")
    return 2 ** widths.pop()


def ova_learn(
    samples: SampleSet, hclass: HypothesisClass, num_classes: Optional[int] = None
) -> list[LearnResult]:
    """Learn one binary "class i or not" hypothesis per class.

    Args:
        samples: inputs with label vectors, the class being their integer form
        hclass: hypothesis class for every binary problem
        num_classes: number of classes, 2^m by default

    Returns:
        One result per class, in class order.
    """
    if not len(samples):
        raise LearningError("cannot learn from an empty sample set")
    classes = multilabel_to_classes(samples)
    total = num_classes if num_classes is not None else _num_classes(samples)
    if total < 2:
        raise LearningError(f"one-vs-all needs at least two classes, got {total}")
    if any(c >= total for _, c in classes):
        raise LearningError(f"sample class outside [0, {total})")
    results = []
    for target in range(total):
        binary = SampleSet.from_pairs((x, int(c == target)) for x, c in classes)
        results.append(erm_learn(binary, hclass))
    return results


def ova_scores(hypotheses: Sequence[LearnResult], x: ClassicalInput) -> np.ndarray:
    """Output of every class hypothesis on x."""
    monomials = monomial_matrix(x.n)[x.as_int]
    matrix = np.array([h.hypothesis for h in hypotheses], dtype=np.int64)
    if matrix.shape[1] != monomials.size:
        raise LearningError(f"hypotheses do not fit input width {x.n}")
    return (matrix @ monomials) % 2


def ova_predict(hypotheses: Sequence[LearnResult], x: ClassicalInput) -> int:
    """Argmax over the class hypotheses; ties, including all zeros, go to the smallest index."""
    if not hypotheses:
        raise LearningError("no hypotheses to predict with")
    return int(np.argmax(ova_scores(hypotheses, x)))


def ova_training_error(hypotheses: Sequence[LearnResult], samples: SampleSet) -> float:
    """Fraction of samples whose class the reduction predicts wrongly."""
    classes = multilabel_to_classes(samples)
    if not classes:
        raise LearningError("cannot score an empty sample set")
    wrong = sum(ova_predict(hypotheses, x) != c for x, c in classes)
    return wrong / len(classes)
