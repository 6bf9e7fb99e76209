"""Security analysis built on top of the sample windows.

Covers the multiclass trade-off between a single m-qubit oracle and the
one-vs-all reduction, membership of a learner in the secure
window, the case analysis of the two contamination rates, and the race between
Alice and an eavesdropper for a sufficient sample set.
"""

from dataclasses import dataclass
from enum import StrEnum
from typing import Optional

from qsl.src.bounds.bounds import (
    BoundsError,
    PacParams,
    SecureWindow,
    sample_complexity_noisy,
    secure_window,
)


class SecurityRegime(StrEnum):
    """Outcome of comparing Alice's and Eve's contamination."""

    ALICE_NOISIER = "alice_noisier_halted"
    SECURE = "secure"
    EVE_NOISIER_HALTED = "eve_noisier_halted"
    FORBIDDEN = "forbidden_by_no_broadcasting"


@dataclass(frozen=True)
class RaceOutcome:
    """Who holds enough samples when Alice stops."""

    alice_samples: int
    eve_samples: int
    eve_required: Optional[int]
    alice_certified: bool
    eve_can_learn: bool

    @property
    def secure(self) -> bool:
        """Alice is certified and Eve is not a learner."""
        return self.alice_certified and not self.eve_can_learn


def single_machine_window(p: PacParams, m: int) -> SecureWindow:
    """Window of one m-qubit oracle learning |H|^m joint hypotheses."""
    if m < 1:
        raise BoundsError(f"label count must be positive, got {m}")
    joint = PacParams(p.epsilon, p.delta, p.h_size**m)
    return secure_window(joint, m)


def ova_sample_budget(p: PacParams, m: int) -> int:
    """Learning samples for 2^m binary decisions, each meeting its own lower bound."""
    if m < 1:
        raise BoundsError(f"label count must be positive, got {m}")
    return 2**m * secure_window(p, 1).m_b


def is_secure_learner(samples_used: int, window: SecureWindow) -> bool:
    """Check that the learner finished inside the secure window."""
    return window.contains(samples_used)


def classify_regime(
    eta_a: float, eta_e: float, eta_c: float, delta_margin: float
) -> SecurityRegime:
    """Place a pair of contamination rates in the protocol's case analysis."""
    threshold = eta_c - delta_margin
    if eta_a < threshold and eta_e < threshold:
        return SecurityRegime.FORBIDDEN
    if eta_a >= eta_e:
        return SecurityRegime.ALICE_NOISIER
    if eta_a < threshold:
        return SecurityRegime.SECURE
    return SecurityRegime.EVE_NOISIER_HALTED


def learning_race(
    p: PacParams,
    window: SecureWindow,
    alice_samples: int,
    eve_samples: int,
    eta_e: float,
) -> RaceOutcome:
    """Compare Eve's sample count with what her contamination requires.

    At eta_e >= 1/2 her labels carry no information and no sample count suffices.
    """
    eve_required = sample_complexity_noisy(p, eta_e) if 0 <= eta_e < 0.5 else None
    return RaceOutcome(
        alice_samples=alice_samples,
        eve_samples=eve_samples,
        eve_required=eve_required,
        alice_certified=is_secure_learner(alice_samples, window),
        eve_can_learn=eve_required is not None and eve_samples >= eve_required,
    )
