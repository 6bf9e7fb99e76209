"""Labelled sample sets."""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from qsl.src.oracle.oracle import ClassicalInput


class LearningError(ValueError):
    """Learning task is ill-posed."""


@dataclass(frozen=True)
class LabeledSample:
    """An input with one label bit per oracle label."""

    input: ClassicalInput
    labels: tuple[int, ...]


@dataclass
class SampleSet:
    """Samples collected by one party.

    Attributes:
        pairs: the collected samples in arrival order
        contaminated_count: how many carry a wrong label (ground truth)
    """

    pairs: list[LabeledSample] = field(default_factory=list)
    contaminated_count: int = 0

    def add(
        self, x: ClassicalInput, labels: Sequence[int], contaminated: bool = False
    ) -> None:
        """Append a sample."""
        self.pairs.append(LabeledSample(x, tuple(int(b) for b in labels)))
        if contaminated:
            self.contaminated_count += 1

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[ClassicalInput, Sequence[int] | int]]
    ) -> "SampleSet":
        """Build a set from (input, label or labels) pairs."""
        samples = cls()
        for x, labels in pairs:
            samples.add(x, (labels,) if isinstance(labels, int) else labels)
        return samples

    def __len__(self) -> int:
        """Return the number of samples."""
        return len(self.pairs)

    def __iter__(self) -> Iterator[LabeledSample]:
        """Iterate over the samples."""
        return iter(self.pairs)

    @property
    def contamination_rate(self) -> float:
        """Fraction of wrong labels; 0 for an empty set."""
        return self.contaminated_count / len(self.pairs) if self.pairs else 0.0

    def width(self) -> int:
        """Input width shared by all samples."""
        if not self.pairs:
            raise LearningError("empty sample set has no input width")
        widths = {sample.input.n for sample in self.pairs}
        if len(widths) != 1:
            raise LearningError(f"samples mix input widths {sorted(widths)}")
        return widths.pop()

    def label_counts(self, label_index: int = 0) -> tuple[np.ndarray, np.ndarray]:
        """Count label 0 and label 1 occurrences per input, indexed by integer form."""
        size = 2 ** self.width()
        inputs = np.array([s.input.as_int for s in self.pairs], dtype=np.int64)
        try:
            labels = np.array([s.labels[label_index] for s in self.pairs], dtype=np.int64)
        except IndexError as e:
            raise LearningError(f"samples carry no label {label_index}") from e
        counts_1 = np.bincount(inputs[labels == 1], minlength=size)
        counts_0 = np.bincount(inputs[labels == 0], minlength=size)
        return counts_0, counts_1
