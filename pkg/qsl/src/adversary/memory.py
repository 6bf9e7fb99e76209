"""Eve's session-local memory of retained quantum states."""

import logging
from collections.abc import Sequence
from typing import Optional

import numpy as np

from qsl.src.quantum.state import Basis, QuantumState, QuantumStateError, measure

logger = logging.getLogger(__name__)


class EveMemory:
    """States Eve keeps from the round in flight, and her sample statistics.

    Eve owns her own random stream so her activity never shifts Alice's draws.
    Retained states are read out in the Z basis once the round ends; only
    learning rounds count as samples, and she is assumed to learn the label
    offset of every round, so each read-out is scored against the ideal bit
    that travelled back to Alice.
    """

    def __init__(self, rng: np.random.Generator, slots: int = 1) -> None:
        """Initialize empty memory for a transit register of the given size."""
        self.rng = rng
        self.slots = slots
        self._pending: list[Optional[QuantumState]] = [None] * slots
        self._touched = False
        self.samples = 0
        self.contaminated = 0
        self.learning_slots = 0
        self.intercepted_rounds = 0

    def begin_round(self) -> None:
        """Forget anything left over from the previous round."""
        self._pending = [None] * self.slots
        self._touched = False

    def retain(self, slot: int, state: QuantumState) -> None:
        """Keep a single-qubit state for a label slot of the current round."""
        if not 0 <= slot < self.slots:
            raise QuantumStateError(f"slot {slot} out of range for {self.slots} slot(s)")
        if state.num_qubits != 1:
            raise QuantumStateError("Eve retains single-qubit states per slot")
        self._pending[slot] = state
        if not self._touched:
            self._touched = True
            self.intercepted_rounds += 1

    def retained(self, slot: int) -> Optional[QuantumState]:
        """Return the state retained for a slot of the current round."""
        return self._pending[slot]

    def settle(self, learning: bool, ideal_bits: Sequence[int]) -> None:
        """Read out the retained states and score them on learning rounds."""
        if learning:
            self.learning_slots += self.slots
            for slot, state in enumerate(self._pending):
                if state is None:
                    continue
                outcome, _ = measure(state, Basis.Z, 0, self.rng)
                self.samples += 1
                if outcome != ideal_bits[slot]:
                    self.contaminated += 1
        self.begin_round()

    @property
    def eta_e_samples(self) -> float:
        """Error rate among the samples Eve holds; 0 when she holds none."""
        return self.contaminated / self.samples if self.samples else 0.0

    @property
    def coverage(self) -> float:
        """Fraction of learning slots Eve holds a sample for."""
        return self.samples / self.learning_slots if self.learning_slots else 0.0
