"""Base class for attack strategies."""

import abc
from enum import StrEnum
from typing import TYPE_CHECKING, Any, ClassVar, Optional

import numpy as np

from qsl.src.adversary.contamination import ContaminationProfile
from qsl.src.adversary.memory import EveMemory
from qsl.src.quantum.state import QuantumState

if TYPE_CHECKING:
    from qsl.app.models.config import AttackConfig


class AttackConfigurationError(ValueError):
    """Attack strategy is misconfigured."""


class ProfileUnavailableError(AttackConfigurationError):
    """Strategy has no closed-form contamination profile."""


class Direction(StrEnum):
    """Transit direction on the quantum channel."""

    A_TO_B = "AtoB"
    B_TO_A = "BtoA"


class AttackStrategy(abc.ABC):
    """Eve's interposition on the quantum channel.

    Built-in strategies only act on the B->A leg, where the transit carries the
    oracle answer.
    """

    attack_type: ClassVar[str]

    @classmethod
    @abc.abstractmethod
    def from_config(cls, config: "AttackConfig", transit_qubits: int = 1) -> "AttackStrategy":
        """Build the strategy from its configuration section."""

    @abc.abstractmethod
    def interpose(
        self,
        direction: Direction,
        transit: QuantumState,
        memory: EveMemory,
        rng: np.random.Generator,
    ) -> QuantumState:
        """Return the state forwarded after Eve's action."""

    @abc.abstractmethod
    def delivered_state(self, rho: QuantumState) -> QuantumState:
        """Expected single-qubit state the receiver gets for input rho."""

    def retained_state(self, rho: QuantumState) -> Optional[QuantumState]:
        """Expected state Eve keeps when she holds something; None if never."""
        return None

    @abc.abstractmethod
    def predicted_profile(self) -> ContaminationProfile:
        """Closed-form contamination rates."""

    @property
    def label(self) -> str:
        """Name used in reports."""
        return self.attack_type

    @property
    def parameter(self) -> Optional[float]:
        """Scalar parameter used in reports, if any."""
        return None

    def describe(self) -> dict[str, Any]:
        """Return a JSON-compatible descriptor."""
        return {"strategy": self.label, "parameter": self.parameter}

    def __repr__(self) -> str:
        """Return a compact representation."""
        if self.parameter is None:
            return f"{type(self).__name__}()"
        return f"{type(self).__name__}({self.parameter:g})"


def eve_interpose(
    strategy: AttackStrategy,
    direction: Direction,
    transit: QuantumState,
    memory: EveMemory,
    rng: np.random.Generator,
) -> QuantumState:
    """Pass the transit register through Eve."""
    if transit.num_qubits != memory.slots:
        raise AttackConfigurationError(
            f"transit has {transit.num_qubits} qubit(s) but Eve tracks {memory.slots} slot(s)"
        )
    return strategy.interpose(direction, transit, memory, rng)
