"""Contamination rates of Alice's and Eve's sample sets."""

from dataclasses import dataclass


@dataclass(frozen=True)
class ContaminationProfile:
    """Per-party label error rates caused by an attack.

    Attributes:
        eta_a_samples: wrong labels among Alice's learning samples
        eta_a_test: Alice's X-test mismatch rate
        eta_e_samples: wrong labels among the samples Eve actually holds
        eve_coverage: fraction of learning label slots Eve holds a sample for
    """

    eta_a_samples: float
    eta_a_test: float
    eta_e_samples: float
    eve_coverage: float = 1.0

    @property
    def eta_a_effective(self) -> float:
        """Worse of Alice's sample and test contamination."""
        return max(self.eta_a_samples, self.eta_a_test)

    @property
    def eta_e_effective(self) -> float:
        """Eve's label error over all learning slots; uncovered slots are coin flips."""
        return self.eve_coverage * self.eta_e_samples + (1 - self.eve_coverage) / 2

    def violates_no_broadcast(self, eta_c: float, tol: float) -> bool:
        """Both parties below the critical contamination by more than tol."""
        threshold = eta_c - tol
        return self.eta_a_effective < threshold and self.eta_e_effective < threshold


NO_CONTAMINATION = ContaminationProfile(0.0, 0.0, 0.0, eve_coverage=0.0)
