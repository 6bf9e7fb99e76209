"""Passive channel without an eavesdropper."""

import numpy as np

from qsl import constants
from qsl.app.models.config import AttackConfig
from qsl.src.adversary.contamination import NO_CONTAMINATION, ContaminationProfile
from qsl.src.adversary.memory import EveMemory
from qsl.src.adversary.strategies.registry import register_attack_as
from qsl.src.adversary.strategies.strategy import AttackStrategy, Direction
from qsl.src.quantum.state import QuantumState


@register_attack_as(constants.ATTACK_NONE)
class NoAttack(AttackStrategy):
    """Eve is absent."""

    @classmethod
    def from_config(cls, config: AttackConfig, transit_qubits: int = 1) -> "NoAttack":
        """Build the strategy from its configuration section."""
        return cls()

    def interpose(
        self,
        direction: Direction,
        transit: QuantumState,
        memory: EveMemory,
        rng: np.random.Generator,
    ) -> QuantumState:
        """Forward the transit untouched."""
        return transit

    def delivered_state(self, rho: QuantumState) -> QuantumState:
        """Return rho."""
        return rho

    def predicted_profile(self) -> ContaminationProfile:
        """Nobody is disturbed and Eve holds nothing."""
        return NO_CONTAMINATION
