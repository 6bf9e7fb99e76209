"""Closed-form PAC sample complexities and the secure sample window."""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass

logger = logging.getLogger(__name__)

# slack for ceilings of values that are integral up to rounding
CEILING_TOLERANCE = 1e-9


class BoundsError(ValueError):
    """Bound parameters are out of range."""


@dataclass(frozen=True)
class PacParams:
    """Accuracy, confidence and model complexity of a PAC task."""

    epsilon: float
    delta: float
    h_size: int

    def __post_init__(self) -> None:
        """Validate ranges."""
        if not 0 < self.epsilon < 1:
            raise BoundsError(f"epsilon must be within (0, 1), got {self.epsilon}")
        if not 0 < self.delta < 1:
            raise BoundsError(f"delta must be within (0, 1), got {self.delta}")
        if int(self.h_size) != self.h_size or self.h_size < 2:
            raise BoundsError(f"h_size must be an integer >= 2, got {self.h_size}")


@dataclass(frozen=True)
class SecureWindow:
    """Sample counts [m_b, m_c] that certify a secure learner."""

    m_b: int
    m_c: int
    eta_c: float

    def __post_init__(self) -> None:
        """Validate ordering."""
        if not 1 <= self.m_b <= self.m_c:
            raise BoundsError(
                f"secure window needs 1 <= m_b <= m_c, got [{self.m_b}, {self.m_c}]"
            )

    @property
    def width(self) -> int:
        """Return m_c - m_b."""
        return self.m_c - self.m_b

    @property
    def ratio(self) -> float:
        """Return m_c / m_b."""
        return self.m_c / self.m_b

    def contains(self, samples: int) -> bool:
        """Check m_b <= samples <= m_c."""
        return self.m_b <= samples <= self.m_c


def _ceil(value: float) -> int:
    return max(1, math.ceil(value - CEILING_TOLERANCE))


def xi(eta: float) -> float:
    """Noise factor 1 / (1 - 2 eta)^2."""
    if not 0 <= eta < 0.5:
        raise BoundsError(f"eta must be within [0, 1/2), got {eta}")
    return 1.0 / (1.0 - 2.0 * eta) ** 2


def sample_complexity_noiseless(p: PacParams) -> int:
    """Smallest M with M >= (1/epsilon) ln(|H|/delta)."""
    return _ceil(math.log(p.h_size / p.delta) / p.epsilon)


def sample_complexity_noisy(p: PacParams, eta: float) -> int:
    """Smallest M with M >= (2 xi(eta) / epsilon^2) ln(2|H|/delta)."""
    return _ceil(2.0 * xi(eta) / p.epsilon**2 * math.log(2 * p.h_size / p.delta))


def eta_c(m: int) -> float:
    """Critical contamination 1/(2m + 4) for an m-qubit transit."""
    if int(m) != m or m < 1:
        raise BoundsError(f"label count must be a positive integer, got {m}")
    return 1.0 / (2 * m + 4)


def secure_window(p: PacParams, m: int = 1) -> SecureWindow:
    """Window whose ends are the noisy complexity at eta -> 0 and at eta_c(m)."""
    critical = eta_c(m)
    window = SecureWindow(
        m_b=sample_complexity_noisy(p, 0.0),
        m_c=sample_complexity_noisy(p, critical),
        eta_c=critical,
    )
    logger.debug("secure window for %s, m=%d: %s", p, m, window)
    return window


def window_sweep(p: PacParams, m_range: Iterable[int]) -> list[SecureWindow]:
    """Secure windows for every label count, in ascending order."""
    label_counts = sorted(set(m_range))
    if not label_counts:
        raise BoundsError("window sweep needs at least one label count")
    return [secure_window(p, m) for m in label_counts]
