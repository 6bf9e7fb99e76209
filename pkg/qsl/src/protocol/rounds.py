"""Alice's round preparation."""

from collections.abc import Set
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from qsl.src.oracle.oracle import ClassicalInput
from qsl.src.protocol.protocol_error import InputSpaceExhaustedError
from qsl.src.quantum.state import Basis, StateLabel, label_for


class RoundKind(StrEnum):
    """Kinds of protocol rounds."""

    LEARNING = "Learning"
    TEST = "Test"

    @property
    def basis(self) -> Basis:
        """Basis Alice prepares and measures in."""
        return Basis.Z if self == RoundKind.LEARNING else Basis.X


@dataclass(frozen=True)
class PreparedRound:
    """What Alice sends in one round: a classical input and one qubit per label."""

    kind: RoundKind
    input: ClassicalInput
    labels: tuple[StateLabel, ...]


def fresh_test_inputs(used_inputs: Set[int], n: int) -> list[int]:
    """Nonzero inputs not yet used, in ascending integer form."""
    return [value for value in range(1, 2**n) if value not in used_inputs]


def alice_prepare_round(
    rng: np.random.Generator, used_inputs: Set[int], n: int, m: int = 1
) -> PreparedRound:
    """Draw the kind, input and qubit labels of the next round.

    Learning and test rounds are equally likely, so Bob cannot tell them apart.
    A learning input is uniform over all 2^n inputs. A test input is uniform
    over nonzero inputs absent from used_inputs, because the all-zero input
    flips X eigenstates and a used input could be taken for a valid sample.

    Raises:
        InputSpaceExhaustedError: no fresh test input exists.
    """
    candidates = fresh_test_inputs(used_inputs, n)
    if not candidates:
        raise InputSpaceExhaustedError(
            f"no fresh nonzero test input left among {2**n} inputs "
            f"({len(used_inputs)} used)"
        )
    kind = RoundKind.TEST if rng.integers(2) else RoundKind.LEARNING
    bits = rng.integers(2, size=m)
    labels = tuple(label_for(kind.basis, int(bit)) for bit in bits)
    if kind == RoundKind.LEARNING:
        value = int(rng.integers(2**n))
    else:
        value = candidates[int(rng.integers(len(candidates)))]
    return PreparedRound(kind, ClassicalInput.from_int(value, n), labels)
