"""Parameters of one protocol session."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from qsl.constants import (
    DEFAULT_CHANNEL_SHRINK,
    DEFAULT_DELTA_MARGIN,
    DEFAULT_GAMMA,
    DEFAULT_SESSION_SEED,
    MAX_QUBITS,
    TARGET_SAMPLES_AUTO,
    TestInputPolicy,
)
from qsl.src.bounds.bounds import PacParams, SecureWindow, eta_c, sample_complexity_noisy
from qsl.src.protocol.protocol_error import ProtocolError

_U64 = 2**64


@dataclass(frozen=True)
class SessionConfig:
    """Everything Alice fixes before the first round.

    Attributes:
        pac: accuracy, confidence and model complexity of the learning task
        m: number of label qubits per round
        gamma: offset subtracted from m_b to get the R.1 test-round count
        delta_margin: slack below eta_c at which R.1 aborts
        eta_c: critical contamination; derived from m when not given
        target_samples: learning samples that complete the task, or "auto"
        channel_shrink: Bloch shrink of the intrinsic channel per transit leg
        seed: 64-bit seed of the session's random streams
        continuous_monitoring: keep re-checking R.1 after its scheduled check
        test_input_policy: what to do once fresh test inputs run out
        record_trace: keep a RoundRecord per round in the outcome
    """

    pac: PacParams
    m: int = 1
    gamma: int = DEFAULT_GAMMA
    delta_margin: float = DEFAULT_DELTA_MARGIN
    eta_c: Optional[float] = None
    target_samples: int | str = TARGET_SAMPLES_AUTO
    channel_shrink: float = DEFAULT_CHANNEL_SHRINK
    seed: int = DEFAULT_SESSION_SEED
    continuous_monitoring: bool = False
    test_input_policy: TestInputPolicy = field(default=TestInputPolicy.RECYCLE)
    record_trace: bool = False

    def __post_init__(self) -> None:
        """Resolve eta_c and check cross-field consistency."""
        if int(self.m) != self.m or not 1 <= self.m <= MAX_QUBITS:
            raise ProtocolError(f"label count must be within [1, {MAX_QUBITS}], got {self.m}")
        if self.eta_c is None:
            object.__setattr__(self, "eta_c", eta_c(self.m))
        if not 0 < self.critical < 0.5:
            raise ProtocolError(f"eta_c must be within (0, 1/2), got {self.eta_c}")
        if self.delta_margin < 0:
            raise ProtocolError(f"delta_margin must be >= 0, got {self.delta_margin}")
        if self.threshold <= 0:
            raise ProtocolError(
                f"eta_c - delta_margin must be positive, got "
                f"{self.critical} - {self.delta_margin}"
            )
        if int(self.gamma) != self.gamma or self.gamma < 0:
            raise ProtocolError(f"gamma must be an integer >= 0, got {self.gamma}")
        if not 0 <= self.channel_shrink <= 1:
            raise ProtocolError(
                f"channel_shrink must be within [0, 1], got {self.channel_shrink}"
            )
        if not 0 <= self.seed < _U64:
            raise ProtocolError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.gamma >= self.window.m_b:
            raise ProtocolError(
                f"gamma {self.gamma} leaves no test rounds before R.1 (m_b={self.window.m_b})"
            )
        if self.target_samples != TARGET_SAMPLES_AUTO:
            if not isinstance(self.target_samples, int) or isinstance(
                self.target_samples, bool
            ):
                raise ProtocolError(
                    f"target_samples must be an integer or '{TARGET_SAMPLES_AUTO}', "
                    f"got {self.target_samples!r}"
                )
            if not self.window.contains(self.target_samples):
                raise ProtocolError(
                    f"target_samples {self.target_samples} outside the secure window "
                    f"[{self.window.m_b}, {self.window.m_c}]"
                )

    @property
    def critical(self) -> float:
        """Resolved critical contamination."""
        assert self.eta_c is not None
        return self.eta_c

    @property
    def threshold(self) -> float:
        """R.1 abort threshold eta_c - delta_margin."""
        return self.critical - self.delta_margin

    @cached_property
    def window(self) -> SecureWindow:
        """Secure window at this session's eta_c."""
        return SecureWindow(
            m_b=sample_complexity_noisy(self.pac, 0.0),
            m_c=sample_complexity_noisy(self.pac, self.critical),
            eta_c=self.critical,
        )

    @property
    def r1_test_rounds(self) -> int:
        """Test-round count at which R.1 is evaluated."""
        return self.window.m_b - self.gamma

    @property
    def auto_target(self) -> bool:
        """Whether the session derives target_samples itself."""
        return self.target_samples == TARGET_SAMPLES_AUTO
