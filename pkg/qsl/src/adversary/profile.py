"""Predicted and measured contamination profiles of attack strategies."""

import logging
from typing import Optional

import numpy as np

from qsl.src.adversary.contamination import ContaminationProfile
from qsl.src.adversary.memory import EveMemory
from qsl.src.adversary.strategies.strategy import AttackConfigurationError, AttackStrategy
from qsl.src.oracle.oracle import OracleSpec
from qsl.src.protocol.channel import run_round
from qsl.src.protocol.rounds import RoundKind, alice_prepare_round
from qsl.src.quantum.state import Basis, StateLabel, fidelity, label_basis, make_state

logger = logging.getLogger(__name__)


def predicted_profile(strategy: AttackStrategy) -> ContaminationProfile:
    """Closed-form contamination rates of a strategy.

    Raises:
        ProfileUnavailableError: the strategy is a general probe.
    """
    return strategy.predicted_profile()


def measured_profile(
    strategy: AttackStrategy,
    spec: OracleSpec,
    rounds: int,
    rng: np.random.Generator,
    channel_shrink: float = 1.0,
) -> ContaminationProfile:
    """Monte Carlo estimate of the contamination rates over protocol rounds.

    Rounds follow the session's preparation rules without input bookkeeping.
    Alice's rates count label slots, Eve's come from her memory.
    """
    if rounds < 1:
        raise AttackConfigurationError(f"rounds must be >= 1, got {rounds}")
    alice_rng, eve_rng = rng.spawn(2)
    memory = EveMemory(eve_rng, spec.m)
    wrong = {RoundKind.LEARNING: 0, RoundKind.TEST: 0}
    slots = {RoundKind.LEARNING: 0, RoundKind.TEST: 0}
    for _ in range(rounds):
        prepared = alice_prepare_round(alice_rng, frozenset(), spec.n, spec.m)
        result = run_round(prepared, spec, strategy, memory, alice_rng, channel_shrink)
        wrong[result.kind] += result.mismatch_count
        slots[result.kind] += spec.m
    profile = ContaminationProfile(
        eta_a_samples=_rate(wrong[RoundKind.LEARNING], slots[RoundKind.LEARNING]),
        eta_a_test=_rate(wrong[RoundKind.TEST], slots[RoundKind.TEST]),
        eta_e_samples=memory.eta_e_samples,
        eve_coverage=memory.coverage,
    )
    logger.debug("measured %r over %d rounds: %s", strategy, rounds, profile)
    return profile


def _rate(count: int, total: int) -> float:
    return count / total if total else 0.0


def alice_fidelity_floor(strategy: AttackStrategy) -> float:
    """Lower bound 1 - min_s F(rho_s, delivered) on Alice's contamination."""
    return 1.0 - min(
        fidelity(make_state(label), strategy.delivered_state(make_state(label)))
        for label in StateLabel
    )


def eve_fidelity_floor(strategy: AttackStrategy) -> Optional[float]:
    """Lower bound on Eve's sample contamination from the states she keeps.

    Eve reads her states out in Z, so only the Z eigenstates enter. None when
    the strategy never keeps anything.
    """
    values = []
    for label in StateLabel:
        if label_basis(label) != Basis.Z:
            continue
        retained = strategy.retained_state(make_state(label))
        if retained is None:
            return None
        values.append(fidelity(make_state(label), retained))
    return 1.0 - min(values)
