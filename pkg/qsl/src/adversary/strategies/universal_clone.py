"""Universal cloning attack."""

import numpy as np

from qsl import constants
from qsl.app.models.config import AttackConfig
from qsl.src.adversary.contamination import ContaminationProfile
from qsl.src.adversary.memory import EveMemory
from qsl.src.adversary.strategies.registry import register_attack_as
from qsl.src.adversary.strategies.strategy import AttackStrategy, Direction
from qsl.src.quantum.cloner import clone_register, universal_clone
from qsl.src.quantum.state import QuantumState


@register_attack_as(constants.ATTACK_UNIVERSAL_CLONE)
class UniversalClone(AttackStrategy):
    """Eve clones every transit qubit and forwards one copy."""

    @classmethod
    def from_config(cls, config: AttackConfig, transit_qubits: int = 1) -> "UniversalClone":
        """Build the strategy from its configuration section."""
        return cls()

    def interpose(
        self,
        direction: Direction,
        transit: QuantumState,
        memory: EveMemory,
        rng: np.random.Generator,
    ) -> QuantumState:
        """Forward one clone and keep the other."""
        if direction != Direction.B_TO_A:
            return transit
        forwarded, kept = clone_register(transit)
        for slot, clone in enumerate(kept):
            memory.retain(slot, clone)
        return forwarded

    def delivered_state(self, rho: QuantumState) -> QuantumState:
        """Alice's clone."""
        return universal_clone(rho)[0]

    def retained_state(self, rho: QuantumState) -> QuantumState:
        """Eve's clone."""
        return universal_clone(rho)[1]

    def predicted_profile(self) -> ContaminationProfile:
        """Both clones err with probability 1 - 5/6 in any basis."""
        error = 1 - constants.CLONER_FIDELITY
        return ContaminationProfile(error, error, error, eve_coverage=1.0)
