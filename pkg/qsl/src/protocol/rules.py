"""Abort and cutoff rules of the protocol."""

import logging
from enum import StrEnum

from qsl.app.metrics import metrics
from qsl.src.protocol.protocol_error import ProtocolError
from qsl.src.protocol.session_config import SessionConfig

logger = logging.getLogger(__name__)


class RuleDecision(StrEnum):
    """Outcome of a rule evaluation."""

    CONTINUE = "Continue"
    ABORT = "Abort"
    QUIT = "Quit"


def estimate_eta(mismatches: int, denominator: int) -> float:
    """Alice's contamination estimate from test mismatches."""
    if denominator <= 0:
        raise ProtocolError(f"eta estimate needs a positive denominator, got {denominator}")
    return mismatches / denominator


def r1_check(mismatches: int, test_rounds: int, config: SessionConfig) -> RuleDecision:
    """Abort when the per-qubit mismatch rate reaches eta_c - delta_margin.

    Every label qubit of a test round is checked on its own, so the denominator
    is test_rounds * m.
    """
    if test_rounds <= 0:
        raise ProtocolError("R.1 check needs at least one test round")
    denominator = test_rounds * config.m
    ratio = estimate_eta(mismatches, denominator)
    decision = RuleDecision.ABORT if ratio >= config.threshold else RuleDecision.CONTINUE
    metrics.r1_checks_total.labels(decision=decision).inc()
    logger.debug(
        "R.1: %d/%d mismatches (%.4f) against threshold %.4f: %s",
        mismatches,
        denominator,
        ratio,
        config.threshold,
        decision,
    )
    return decision


def r2_check(learning_rounds: int, completed: bool, m_c: int) -> RuleDecision:
    """Quit once m_c learning rounds pass without completing the learning."""
    if not completed and learning_rounds >= m_c:
        return RuleDecision.QUIT
    return RuleDecision.CONTINUE
