"""One protocol round through the quantum channel."""

import logging
from dataclasses import dataclass

import numpy as np

from qsl.src.adversary.memory import EveMemory
from qsl.src.adversary.strategies.strategy import AttackStrategy, Direction, eve_interpose
from qsl.src.learning.samples import SampleSet
from qsl.src.oracle.oracle import (
    ClassicalInput,
    OracleSpec,
    oracle_apply,
    reed_muller_eval,
)
from qsl.src.protocol.rounds import PreparedRound, RoundKind, alice_prepare_round
from qsl.src.quantum.state import (
    QuantumState,
    StateLabel,
    depolarize,
    label_bit,
    make_state,
    measure,
    tensor,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RoundResult:
    """Alice's view of a finished round plus ground truth.

    Attributes:
        kind: learning or test round
        input: classical input sent to Bob
        labels: prepared qubit labels, one per label slot
        outcomes: Alice's measurement outcomes
        expected: outcomes of a faithful channel
    """

    kind: RoundKind
    input: ClassicalInput
    labels: tuple[StateLabel, ...]
    outcomes: tuple[int, ...]
    expected: tuple[int, ...]

    @property
    def mismatches(self) -> tuple[bool, ...]:
        """Per-slot disagreement with the faithful outcome."""
        return tuple(o != e for o, e in zip(self.outcomes, self.expected))

    @property
    def mismatch_count(self) -> int:
        """Number of disagreeing slots."""
        return sum(self.mismatches)

    @property
    def sample_labels(self) -> tuple[int, ...]:
        """Learning labels: outcome XOR the prepared bit."""
        return tuple(o ^ label_bit(lbl) for o, lbl in zip(self.outcomes, self.labels))


def _channel_noise(transit: QuantumState, shrink: float) -> QuantumState:
    if shrink == 1.0:
        return transit
    if transit.num_qubits == 1:
        return depolarize(transit, shrink)
    for target in range(transit.num_qubits):
        transit = depolarize(transit, shrink, target)
    return transit


def run_round(
    prepared: PreparedRound,
    spec: OracleSpec,
    attack: AttackStrategy,
    memory: EveMemory,
    rng: np.random.Generator,
    channel_shrink: float = 1.0,
) -> RoundResult:
    """Send a prepared round to Bob and back, then let Alice measure.

    Eve acts on both legs with her own stream; the intrinsic channel noise
    follows her on each leg. Alice measures every slot in Z for learning rounds
    and in X for test rounds.
    """
    transit = tensor(make_state(label) for label in prepared.labels)
    memory.begin_round()
    transit = eve_interpose(attack, Direction.A_TO_B, transit, memory, memory.rng)
    transit = _channel_noise(transit, channel_shrink)
    transit = oracle_apply(spec, prepared.input, transit)
    transit = eve_interpose(attack, Direction.B_TO_A, transit, memory, memory.rng)
    transit = _channel_noise(transit, channel_shrink)

    outcomes = []
    for slot in range(spec.m):
        outcome, transit = measure(transit, prepared.kind.basis, slot, rng)
        outcomes.append(outcome)

    learning = prepared.kind == RoundKind.LEARNING
    if learning:
        expected = tuple(
            reed_muller_eval(spec, slot, prepared.input) ^ label_bit(label)
            for slot, label in enumerate(prepared.labels)
        )
    else:
        expected = tuple(label_bit(label) for label in prepared.labels)
    memory.settle(learning, expected)
    return RoundResult(
        prepared.kind, prepared.input, prepared.labels, tuple(outcomes), expected
    )


def collect_learning_samples(
    spec: OracleSpec,
    attack: AttackStrategy,
    count: int,
    rng: np.random.Generator,
    channel_shrink: float = 1.0,
) -> SampleSet:
    """Run rounds until count learning samples arrive; test rounds are discarded."""
    alice_rng, eve_rng = rng.spawn(2)
    memory = EveMemory(eve_rng, spec.m)
    samples = SampleSet()
    while len(samples) < count:
        prepared = alice_prepare_round(alice_rng, frozenset(), spec.n, spec.m)
        result = run_round(prepared, spec, attack, memory, alice_rng, channel_shrink)
        if result.kind == RoundKind.LEARNING:
            samples.add(result.input, result.sample_labels, any(result.mismatches))
    return samples
