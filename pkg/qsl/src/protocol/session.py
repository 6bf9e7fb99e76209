"""The Alice/Bob session state machine."""

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Optional

from qsl.app.metrics import metrics
from qsl.constants import TestInputPolicy
from qsl.src.adversary.contamination import ContaminationProfile
from qsl.src.adversary.memory import EveMemory
from qsl.src.adversary.strategies.strategy import AttackStrategy
from qsl.src.bounds.bounds import SecureWindow, sample_complexity_noisy
from qsl.src.bounds.security import RaceOutcome, learning_race
from qsl.src.learning.erm import LearnResult, erm_learn
from qsl.src.learning.hypothesis import HypothesisClass
from qsl.src.learning.samples import LearningError, SampleSet
from qsl.src.oracle.oracle import OracleSpec
from qsl.src.protocol.channel import run_round
from qsl.src.protocol.protocol_error import InputSpaceExhaustedError, ProtocolError
from qsl.src.protocol.rounds import RoundKind, alice_prepare_round
from qsl.src.protocol.rules import RuleDecision, estimate_eta, r1_check, r2_check
from qsl.src.protocol.session_config import SessionConfig
from qsl.src.protocol.trace import RoundRecord
from qsl.utils.seeding import make_rng

logger = logging.getLogger(__name__)


class SessionStatus(StrEnum):
    """Terminal status of a session."""

    COMPLETED = "Completed"
    ABORTED_R1 = "AbortedR1"
    QUIT_R2 = "QuitR2"


@dataclass
class SessionOutcome:
    """Everything a finished session reports.

    Attributes:
        status: terminal status
        samples: Alice's learning samples
        test_rounds: test rounds played
        test_mismatches: mismatching test qubits
        eta_estimate: test_mismatches over all tested qubits
        hypotheses: one learned hypothesis per label, only when completed
        learning_rounds: learning rounds played
        target_samples: sample count that completes the learning (final value)
        window: secure window of the session
        r1_mismatches: mismatches counted when R.1 ran, None if it never ran
        r1_eta_estimate: the R.1 statistic, None if R.1 never ran
        input_epochs: freshness epochs of test inputs
        eve_samples: label samples Eve holds
        eve_contamination: error rate among Eve's samples
        eve_coverage: fraction of learning label slots Eve holds a sample for
        race: Alice-versus-Eve sample race, only when completed
        trace: per-round records when tracing was enabled
    """

    status: SessionStatus
    samples: SampleSet
    test_rounds: int
    test_mismatches: int
    eta_estimate: float
    hypotheses: Optional[list[LearnResult]]
    learning_rounds: int
    target_samples: int
    window: SecureWindow
    r1_mismatches: Optional[int] = None
    r1_eta_estimate: Optional[float] = None
    input_epochs: int = 1
    eve_samples: int = 0
    eve_contamination: float = 0.0
    eve_coverage: float = 0.0
    race: Optional[RaceOutcome] = None
    trace: list[RoundRecord] = field(default_factory=list)

    @property
    def profile(self) -> ContaminationProfile:
        """Contamination rates observed in this session."""
        return ContaminationProfile(
            eta_a_samples=self.samples.contamination_rate,
            eta_a_test=self.eta_estimate,
            eta_e_samples=self.eve_contamination,
            eve_coverage=self.eve_coverage,
        )


def auto_target(config: SessionConfig, eta_hat: float) -> int:
    """Sample target for Alice's estimated contamination, clamped to the window."""
    window = config.window
    target = sample_complexity_noisy(config.pac, eta_hat) if eta_hat < 0.5 else window.m_c
    return min(max(target, window.m_b), window.m_c)


def _hypothesis_class(config: SessionConfig, spec: OracleSpec) -> HypothesisClass:
    try:
        return HypothesisClass.with_size(spec.n, config.pac.h_size)
    except LearningError as e:
        raise ProtocolError(f"session cannot learn over |H|={config.pac.h_size}: {e}") from e


def run_session(
    config: SessionConfig, spec: OracleSpec, attack: AttackStrategy
) -> SessionOutcome:
    """Play rounds until the learning completes, R.1 aborts or R.2 quits.

    R.1 runs once, when the test-round count reaches m_b - gamma; with
    continuous monitoring it runs again after every later test round. The
    learning completes once R.1 has passed and target_samples learning samples
    are in; in auto mode the target follows the R.1 estimate. R.2 quits when
    m_c learning rounds pass without completion.

    Test inputs avoid the learning inputs used so far. Under the recycle policy
    that set is cleared when it covers every nonzero input, so a test input may
    repeat a learning input from an earlier epoch.

    Raises:
        ProtocolError: config and oracle disagree, or the class size has no
            degree-capped class.
        InputSpaceExhaustedError: strict policy and no fresh test input left.
    """
    if config.m != spec.m:
        raise ProtocolError(
            f"session expects {config.m} label(s) but the oracle has {spec.m}"
        )
    hclass = _hypothesis_class(config, spec)
    window = config.window
    alice_rng, eve_rng = make_rng(config.seed).spawn(2)
    memory = EveMemory(eve_rng, spec.m)

    samples = SampleSet()
    used_inputs: set[int] = set()
    trace: list[RoundRecord] = []
    target = window.m_b if config.auto_target else int(config.target_samples)
    epoch = 1
    round_index = learning_rounds = test_rounds = test_mismatches = 0
    r1_mismatches: Optional[int] = None
    r1_eta: Optional[float] = None
    status: Optional[SessionStatus] = None

    logger.debug(
        "session seed=%d window=[%d, %d] R.1 at %d test rounds, attack %s",
        config.seed,
        window.m_b,
        window.m_c,
        config.r1_test_rounds,
        attack.label,
    )
    while status is None:
        try:
            prepared = alice_prepare_round(alice_rng, used_inputs, spec.n, spec.m)
        except InputSpaceExhaustedError:
            if config.test_input_policy == TestInputPolicy.STRICT:
                raise
            used_inputs.clear()
            epoch += 1
            metrics.input_epochs_total.inc()
            logger.debug("fresh test inputs exhausted, epoch %d starts", epoch)
            continue

        result = run_round(prepared, spec, attack, memory, alice_rng, config.channel_shrink)
        metrics.rounds_total.labels(kind=result.kind).inc()
        contaminated = any(result.mismatches)
        if result.kind == RoundKind.LEARNING:
            learning_rounds += 1
            used_inputs.add(result.input.as_int)
            samples.add(result.input, result.sample_labels, contaminated)
        else:
            test_rounds += 1
            test_mismatches += result.mismatch_count
            first_check = r1_mismatches is None and test_rounds == config.r1_test_rounds
            if first_check or (r1_mismatches is not None and config.continuous_monitoring):
                decision = r1_check(test_mismatches, test_rounds, config)
                if first_check:
                    r1_mismatches = test_mismatches
                    r1_eta = estimate_eta(test_mismatches, test_rounds * spec.m)
                    if config.auto_target:
                        target = auto_target(config, r1_eta)
                if decision == RuleDecision.ABORT:
                    status = SessionStatus.ABORTED_R1

        if config.record_trace:
            trace.append(
                RoundRecord(
                    round_index=round_index,
                    kind=result.kind,
                    input=result.input,
                    sent_state_labels=result.labels,
                    measured=result.outcomes,
                    mismatch=contaminated,
                    ground_truth_contaminated=(
                        contaminated and result.kind == RoundKind.LEARNING
                    ),
                    epoch=epoch,
                )
            )
        round_index += 1

        if status is None:
            completed = r1_mismatches is not None and len(samples) >= target
            if completed:
                status = SessionStatus.COMPLETED
            elif r2_check(learning_rounds, completed, window.m_c) == RuleDecision.QUIT:
                status = SessionStatus.QUIT_R2

    hypotheses = None
    race = None
    if status == SessionStatus.COMPLETED:
        hypotheses = [erm_learn(samples, hclass, spec, i) for i in range(spec.m)]
        race = learning_race(
            config.pac, window, len(samples), memory.samples, memory.eta_e_samples
        )
    eta = test_mismatches / max(1, test_rounds * spec.m)
    metrics.sessions_total.labels(status=status).inc()
    metrics.eta_estimate.observe(eta)
    logger.info(
        "session seed=%d finished %s after %d learning and %d test rounds, eta=%.4f",
        config.seed,
        status,
        learning_rounds,
        test_rounds,
        eta,
    )
    return SessionOutcome(
        status=status,
        samples=samples,
        test_rounds=test_rounds,
        test_mismatches=test_mismatches,
        eta_estimate=eta,
        hypotheses=hypotheses,
        learning_rounds=learning_rounds,
        target_samples=target,
        window=window,
        r1_mismatches=r1_mismatches,
        r1_eta_estimate=r1_eta,
        input_epochs=epoch,
        eve_samples=memory.samples,
        eve_contamination=memory.eta_e_samples,
        eve_coverage=memory.coverage,
        race=race,
        trace=trace,
    )
