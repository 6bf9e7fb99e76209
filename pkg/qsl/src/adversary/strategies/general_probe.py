"""General attack: a joint unitary on the transit and a small ancilla."""

import logging
from typing import Optional

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
    ProfileUnavailableError,
)
from qsl.src.quantum.gates import (
    Gate,
    apply_gate,
    controlled,
    custom_gate,
    rotation_y,
)
from qsl.src.quantum.state import (
    QuantumState,
    QuantumStateError,
    StateLabel,
    make_state,
    partial_trace,
    tensor,
)

logger = logging.getLogger(__name__)


def probe_unitary(
    preset: constants.ProbePreset, transit_qubits: int = 1, theta: float = np.pi
) -> tuple[np.ndarray, int]:
    """Build a preset probe and return it with its ancilla size.

    Transit qubit j controls ancilla qubit j; transit slots beyond the ancilla
    size are left alone.
    """
    ancilla_qubits = min(transit_qubits, constants.MAX_PROBE_ANCILLA_QUBITS)
    total = transit_qubits + ancilla_qubits
    match constants.ProbePreset(preset):
        case constants.ProbePreset.IDENTITY:
            operator = np.eye(2, dtype=complex)
        case constants.ProbePreset.CNOT:
            operator = np.array([[0, 1], [1, 0]], dtype=complex)
        case constants.ProbePreset.CONTROLLED_RY:
            operator = rotation_y(theta)
        case _:
            raise AttackConfigurationError(f"unknown probe preset '{preset}'")
    unitary = np.eye(2**total, dtype=complex)
    for slot in range(ancilla_qubits):
        unitary = controlled(operator, slot, transit_qubits + slot, total) @ unitary
    return unitary, ancilla_qubits


@register_attack_as(constants.ATTACK_GENERAL_PROBE)
class GeneralProbe(AttackStrategy):
    """Eve entangles the transit with her ancilla and keeps the ancilla.

    The probe acts on the B->A leg only, after the oracle has written the
    label; the A->B transit passes untouched. The register is ordered transit
    first, then ancilla; ancilla qubit j is Eve's copy of label slot j.
    """

    def __init__(
        self,
        unitary: np.ndarray,
        ancilla_qubits: int = 1,
        name: str = "custom",
        theta: Optional[float] = None,
    ) -> None:
        """Initialize with the joint unitary."""
        if not 1 <= ancilla_qubits <= constants.MAX_PROBE_ANCILLA_QUBITS:
            raise AttackConfigurationError(
                f"probe ancilla must have 1..{constants.MAX_PROBE_ANCILLA_QUBITS} "
                f"qubit(s), got {ancilla_qubits}"
            )
        try:
            self.gate: Gate = custom_gate(unitary)
        except QuantumStateError as e:
            raise AttackConfigurationError(f"invalid probe: {e}") from e
        if self.gate.num_qubits <= ancilla_qubits:
            raise AttackConfigurationError(
                f"probe on {self.gate.num_qubits} qubit(s) leaves no room for the transit "
                f"next to {ancilla_qubits} ancilla qubit(s)"
            )
        self.ancilla_qubits = ancilla_qubits
        self.transit_qubits = self.gate.num_qubits - ancilla_qubits
        self.name = name
        self.theta = theta

    @classmethod
    def preset(
        cls, preset: constants.ProbePreset, transit_qubits: int = 1, theta: float = np.pi
    ) -> "GeneralProbe":
        """Build one of the preset probes."""
        unitary, ancilla_qubits = probe_unitary(preset, transit_qubits, theta)
        preset = constants.ProbePreset(preset)
        return cls(
            unitary,
            ancilla_qubits,
            name=str(preset),
            theta=theta if preset == constants.ProbePreset.CONTROLLED_RY else None,
        )

    @classmethod
    def from_config(cls, config: AttackConfig, transit_qubits: int = 1) -> "GeneralProbe":
        """Build the strategy from its configuration section."""
        return cls.preset(config.probe, transit_qubits, config.theta)

    @property
    def label(self) -> str:
        """Name used in reports."""
        return f"{self.attack_type}/{self.name}"

    @property
    def parameter(self) -> Optional[float]:
        """Rotation angle of parameterized presets."""
        return self.theta

    def _joint(self, transit: QuantumState) -> QuantumState:
        if transit.num_qubits != self.transit_qubits:
            raise AttackConfigurationError(
                f"probe expects a {self.transit_qubits}-qubit transit, "
                f"got {transit.num_qubits}"
            )
        ancilla = [make_state(StateLabel.ZERO)] * self.ancilla_qubits
        return apply_gate(tensor([transit, *ancilla]), self.gate, 0)

    def interpose(
        self,
        direction: Direction,
        transit: QuantumState,
        memory: EveMemory,
        rng: np.random.Generator,
    ) -> QuantumState:
        """Forward the reduced transit and keep the reduced ancilla qubits."""
        if direction != Direction.B_TO_A:
            return transit
        joint = self._joint(transit)
        n = self.transit_qubits
        for slot in range(min(n, self.ancilla_qubits)):
            memory.retain(slot, partial_trace(joint, [n + slot]))
        return partial_trace(joint, range(n))

    def delivered_state(self, rho: QuantumState) -> QuantumState:
        """Transit after the ancilla is traced out."""
        return partial_trace(self._joint(rho), range(self.transit_qubits))

    def retained_state(self, rho: QuantumState) -> QuantumState:
        """Eve's first ancilla qubit."""
        return partial_trace(self._joint(rho), [self.transit_qubits])

    def predicted_profile(self) -> ContaminationProfile:
        """Not available in closed form; estimate it with measured_profile."""
        raise ProfileUnavailableError(
            "general probe has no closed-form profile, use measured_profile"
        )
