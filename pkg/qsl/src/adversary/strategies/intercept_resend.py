"""Intercept-resend attacks in a fixed or random basis."""

import abc
import logging

import numpy as np

from qsl import constants
from qsl.app.models.config import AttackConfig
from qsl.src.adversary.contamination import ContaminationProfile
from qsl.src.adversary.memory import EveMemory
from qsl.src.adversary.strategies.registry import register_attack_as
from qsl.src.adversary.strategies.strategy import (
    AttackConfigurationError,
    AttackStrategy,
    Direction,
)
from qsl.src.quantum.state import (
    Basis,
    QuantumState,
    label_for,
    make_state,
    measure,
    outcome_probabilities,
)

logger = logging.getLogger(__name__)


def dephase(rho: QuantumState, basis: Basis) -> QuantumState:
    """Expected post-measurement state of a non-selective measurement."""
    p0, p1 = outcome_probabilities(rho, basis)
    zero, one = (make_state(label_for(basis, bit)) for bit in (0, 1))
    return QuantumState(1, p0 * zero.matrix + p1 * one.matrix)


class InterceptResend(AttackStrategy):
    """Eve measures the transit with probability p and resends what she saw.

    Every label qubit of an intercepted round is measured in the same basis.
    """

    def __init__(self, p: float = 1.0) -> None:
        """Initialize with the interception probability."""
        if not 0.0 <= p <= 1.0:
            raise AttackConfigurationError(
                f"interception probability must be within [0, 1], got {p}"
            )
        self.p = p

    @classmethod
    def from_config(cls, config: AttackConfig, transit_qubits: int = 1) -> "InterceptResend":
        """Build the strategy from its configuration section."""
        return cls(config.p)

    @property
    def parameter(self) -> float:
        """Return the interception probability."""
        return self.p

    @abc.abstractmethod
    def choose_basis(self, rng: np.random.Generator) -> Basis:
        """Pick the measurement basis of one intercepted round."""

    @abc.abstractmethod
    def basis_weights(self) -> dict[Basis, float]:
        """Probability of each basis given that a round is intercepted."""

    def interpose(
        self,
        direction: Direction,
        transit: QuantumState,
        memory: EveMemory,
        rng: np.random.Generator,
    ) -> QuantumState:
        """Measure and resend on the B->A leg."""
        if direction != Direction.B_TO_A or rng.random() >= self.p:
            return transit
        basis = self.choose_basis(rng)
        state = transit
        for slot in range(transit.num_qubits):
            outcome, state = measure(state, basis, slot, rng)
            memory.retain(slot, make_state(label_for(basis, outcome)))
        return state

    def retained_state(self, rho: QuantumState) -> QuantumState:
        """Eve keeps the eigenstate she observed."""
        return QuantumState(
            1,
            sum(w * dephase(rho, b).matrix for b, w in self.basis_weights().items()),
        )

    def delivered_state(self, rho: QuantumState) -> QuantumState:
        """Untouched with probability 1 - p, else the resent eigenstate."""
        resent = self.retained_state(rho)
        return QuantumState(1, (1 - self.p) * rho.matrix + self.p * resent.matrix)

    def predicted_profile(self) -> ContaminationProfile:
        """A wrong-basis measurement randomizes the bit in the other basis."""
        weights = self.basis_weights()
        return ContaminationProfile(
            eta_a_samples=self.p * weights.get(Basis.X, 0.0) / 2,
            eta_a_test=self.p * weights.get(Basis.Z, 0.0) / 2,
            eta_e_samples=weights.get(Basis.X, 0.0) / 2,
            eve_coverage=self.p,
        )


@register_attack_as(constants.ATTACK_INTERCEPT_Z)
class InterceptResendZ(InterceptResend):
    """Intercept in the computational basis."""

    def choose_basis(self, rng: np.random.Generator) -> Basis:
        """Always Z."""
        return Basis.Z

    def basis_weights(self) -> dict[Basis, float]:
        """Always Z."""
        return {Basis.Z: 1.0}


@register_attack_as(constants.ATTACK_INTERCEPT_X)
class InterceptResendX(InterceptResend):
    """Intercept in the Hadamard basis."""

    def choose_basis(self, rng: np.random.Generator) -> Basis:
        """Always X."""
        return Basis.X

    def basis_weights(self) -> dict[Basis, float]:
        """Always X."""
        return {Basis.X: 1.0}


@register_attack_as(constants.ATTACK_INTERCEPT_RANDOM)
class InterceptResendRandom(InterceptResend):
    """Intercept in a basis picked uniformly per round."""

    def choose_basis(self, rng: np.random.Generator) -> Basis:
        """Z or X with probability 1/2."""
        return Basis.Z if rng.integers(2) == 0 else Basis.X

    def basis_weights(self) -> dict[Basis, float]:
        """Both bases equally likely."""
        return {Basis.Z: 0.5, Basis.X: 0.5}
