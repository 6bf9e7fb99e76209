"""Config classes for the configuration structure."""

import logging
import math
from typing import Any, Optional

from pydantic import BaseModel, NonNegativeFloat, PositiveInt, field_validator

from qsl import constants
from qsl.src.bounds.bounds import BoundsError, PacParams
from qsl.src.oracle.oracle import OracleSpec, OracleSpecError
from qsl.src.protocol.protocol_error import ProtocolError
from qsl.src.protocol.session_config import SessionConfig
from qsl.utils import checks


def _convert(data: dict, key: str, default: Any, kind: type, section: str) -> Any:
    """Read one scalar option and convert it, reporting the option on failure."""
    value = data.get(key, default)
    if value is None:
        return None
    if kind is int and isinstance(value, float) and not value.is_integer():
        raise checks.InvalidConfigurationError(
            f"{section}.{key} must be an integer, got {value!r}"
        )
    if kind in (int, float) and isinstance(value, bool):
        raise checks.InvalidConfigurationError(
            f"{section}.{key} must be a number, got {value!r}"
        )
    try:
        return kind(value)
    except (TypeError, ValueError) as e:
        raise checks.InvalidConfigurationError(
            f"{section}.{key} must be of type {kind.__name__}, got {value!r}"
        ) from e


class LoggingConfig(BaseModel):
    """Logging configuration."""

    app_log_level: int = logging.INFO
    lib_log_level: int = logging.WARNING

    def __init__(self, **data: Optional[dict]) -> None:
        """Initialize configuration and perform basic validation."""
        # convert input strings (level names, eg. debug/info,...) to
        # logging level names (integer values) for defined model fields
        for field in filter(lambda x: x.endswith("_log_level"), self.model_fields):
            if field in data:
                data[field] = checks.get_log_level(data[field])  # type: ignore[assignment]
        super().__init__(**data)


class PacConfig(BaseModel):
    """Accuracy, confidence and model complexity of the learning task."""

    epsilon: float = 0.1
    delta: float = 0.1
    h_size: int = 16

    def __init__(self, data: Optional[dict] = None) -> None:
        """Initialize configuration and perform basic validation."""
        super().__init__()
        if data is None:
            return
        checks.require_mapping(data, "pac")
        self.epsilon = _convert(data, "epsilon", self.epsilon, float, "pac")
        self.delta = _convert(data, "delta", self.delta, float, "pac")
        self.h_size = _convert(data, "h_size", self.h_size, int, "pac")

    def to_params(self) -> PacParams:
        """Return the bounds-level parameters."""
        try:
            return PacParams(self.epsilon, self.delta, self.h_size)
        except BoundsError as e:
            raise checks.InvalidConfigurationError(f"invalid pac section: {e}") from e

    def validate_yaml(self) -> None:
        """Validate PAC parameters."""
        self.to_params()


class ProtocolConfig(BaseModel):
    """Session section: everything Alice fixes before the first round."""

    pac: PacConfig = PacConfig()
    m: Optional[int] = None
    gamma: int = constants.DEFAULT_GAMMA
    delta_margin: float = constants.DEFAULT_DELTA_MARGIN
    eta_c: Optional[float] = None
    target_samples: int | str = constants.TARGET_SAMPLES_AUTO
    channel_shrink: float = constants.DEFAULT_CHANNEL_SHRINK
    seed: int = constants.DEFAULT_SESSION_SEED
    continuous_monitoring: bool = False
    test_input_policy: constants.TestInputPolicy = constants.TestInputPolicy.RECYCLE
    record_trace: bool = False

    def __init__(self, data: Optional[dict] = None) -> None:
        """Initialize configuration and perform basic validation."""
        super().__init__()
        if data is None:
            return
        checks.require_mapping(data, "session")
        section = "session"
        self.pac = PacConfig(data.get("pac", {}))
        self.m = _convert(data, "m", None, int, section)
        self.gamma = _convert(data, "gamma", self.gamma, int, section)
        self.delta_margin = _convert(data, "delta_margin", self.delta_margin, float, section)
        self.eta_c = _convert(data, "eta_c", None, float, section)
        target = data.get("target_samples", constants.TARGET_SAMPLES_AUTO)
        if target != constants.TARGET_SAMPLES_AUTO:
            target = _convert(data, "target_samples", target, int, section)
        self.target_samples = target
        self.channel_shrink = _convert(
            data, "channel_shrink", self.channel_shrink, float, section
        )
        self.seed = _convert(data, "seed", self.seed, int, section)
        self.continuous_monitoring = bool(data.get("continuous_monitoring", False))
        policy = data.get("test_input_policy", constants.TestInputPolicy.RECYCLE)
        if policy not in list(constants.TestInputPolicy):
            raise checks.InvalidConfigurationError(
                f"invalid test_input_policy '{policy}', valid policies are "
                f"{[str(p) for p in constants.TestInputPolicy]}"
            )
        self.test_input_policy = constants.TestInputPolicy(policy)
        self.record_trace = bool(data.get("record_trace", False))

    def to_session_config(self, m: int, seed: Optional[int] = None) -> SessionConfig:
        """Build the protocol-level session parameters.

        Args:
            m: label count of the oracle the session runs against
            seed: overrides the configured session seed
        """
        if self.m is not None and self.m != m:
            raise checks.InvalidConfigurationError(
                f"session.m={self.m} does not match the oracle's {m} label(s)"
            )
        try:
            return SessionConfig(
                pac=self.pac.to_params(),
                m=m,
                gamma=self.gamma,
                delta_margin=self.delta_margin,
                eta_c=self.eta_c,
                target_samples=self.target_samples,
                channel_shrink=self.channel_shrink,
                seed=self.seed if seed is None else seed,
                continuous_monitoring=self.continuous_monitoring,
                test_input_policy=self.test_input_policy,
                record_trace=self.record_trace,
            )
        except ProtocolError as e:
            raise checks.InvalidConfigurationError(f"invalid session section: {e}") from e

    def validate_yaml(self, m: int) -> None:
        """Validate the session against the oracle's label count."""
        self.pac.validate_yaml()
        self.to_session_config(m)


class AttackConfig(BaseModel):
    """Descriptor of Eve's strategy."""

    type: str = constants.ATTACK_NONE
    p: float = 1.0
    probe: constants.ProbePreset = constants.ProbePreset.IDENTITY
    theta: float = math.pi

    def __init__(self, data: Optional[dict] = None) -> None:
        """Initialize configuration and perform basic validation."""
        super().__init__()
        if data is None:
            return
        checks.require_mapping(data, "attack")
        self.type = str(data.get("type", constants.ATTACK_NONE))
        self.p = _convert(data, "p", self.p, float, "attack")
        probe = data.get("probe", constants.ProbePreset.IDENTITY)
        if probe not in list(constants.ProbePreset):
            raise checks.InvalidConfigurationError(
                f"invalid probe '{probe}', valid probes are "
                f"{[str(p) for p in constants.ProbePreset]}"
            )
        self.probe = constants.ProbePreset(probe)
        self.theta = _convert(data, "theta", self.theta, float, "attack")

    @property
    def parameterized(self) -> bool:
        """Whether the strategy has a scalar a sweep grid can vary."""
        return self.type in constants.INTERCEPT_ATTACK_TYPES or (
            self.type == constants.ATTACK_GENERAL_PROBE
            and self.probe == constants.ProbePreset.CONTROLLED_RY
        )

    def with_parameter(self, value: float) -> "AttackConfig":
        """Copy with the sweep parameter (p or theta) replaced."""
        if self.type in constants.INTERCEPT_ATTACK_TYPES:
            return self.model_copy(update={"p": value})
        if self.parameterized:
            return self.model_copy(update={"theta": value})
        raise checks.InvalidConfigurationError(f"attack '{self.type}' has no parameter")

    def validate_yaml(self) -> None:
        """Validate attack descriptor."""
        if self.type not in constants.SUPPORTED_ATTACK_TYPES:
            raise checks.InvalidConfigurationError(
                f"invalid attack type '{self.type}', supported types are "
                f"{sorted(constants.SUPPORTED_ATTACK_TYPES)}"
            )
        if not 0.0 <= self.p <= 1.0:
            raise checks.InvalidConfigurationError(
                f"attack.p must be within [0, 1], got {self.p}"
            )
        if not math.isfinite(self.theta):
            raise checks.InvalidConfigurationError(
                f"attack.theta must be finite, got {self.theta}"
            )


class SweepEntry(BaseModel):
    """One attack family of a sweep and the parameter values it takes."""

    attack: AttackConfig = AttackConfig()
    grid: list[float] = []

    def __init__(self, data: Optional[dict] = None) -> None:
        """Initialize configuration and perform basic validation."""
        super().__init__()
        if data is None:
            return
        checks.require_mapping(data, "sweep.attacks[]")
        self.attack = AttackConfig(data.get("attack", {}))
        grid = data.get("grid", [])
        if not isinstance(grid, list):
            raise checks.InvalidConfigurationError(
                f"sweep grid must be a list, got {type(grid).__name__}"
            )
        self.grid = [_convert({"grid": v}, "grid", None, float, "sweep") for v in grid]

    def attacks(self) -> list[AttackConfig]:
        """Attack descriptors of every grid point."""
        if not self.attack.parameterized:
            return [self.attack]
        return [self.attack.with_parameter(value) for value in self.grid]

    def validate_yaml(self) -> None:
        """Validate sweep entry."""
        self.attack.validate_yaml()
        if self.attack.parameterized and not self.grid:
            raise checks.InvalidConfigurationError(
                f"sweep entry for '{self.attack.type}' needs a nonempty grid"
            )
        for attack in self.attacks():
            attack.validate_yaml()


class SweepConfig(BaseModel):
    """Sweep section."""

    attacks: list[SweepEntry] = []
    standard: bool = False
    rounds: PositiveInt = constants.DEFAULT_SWEEP_ROUNDS
    tolerance: NonNegativeFloat = constants.DEFAULT_SWEEP_TOLERANCE

    def __init__(self, data: Optional[dict] = None) -> None:
        """Initialize configuration and perform basic validation."""
        super().__init__()
        if data is None:
            return
        checks.require_mapping(data, "sweep")
        entries = data.get("attacks", [])
        if not isinstance(entries, list):
            raise checks.InvalidConfigurationError("sweep.attacks must be a list")
        self.attacks = [SweepEntry(entry) for entry in entries]
        self.standard = bool(data.get("standard", False))
        self.rounds = _convert(data, "rounds", self.rounds, int, "sweep")
        self.tolerance = _convert(data, "tolerance", self.tolerance, float, "sweep")

    def validate_yaml(self) -> None:
        """Validate sweep section."""
        if self.rounds < 1:
            raise checks.InvalidConfigurationError(
                f"sweep.rounds must be >= 1, got {self.rounds}"
            )
        if self.tolerance < 0:
            raise checks.InvalidConfigurationError(
                f"sweep.tolerance must be >= 0, got {self.tolerance}"
            )
        for entry in self.attacks:
            entry.validate_yaml()


class MonteCarloConfig(BaseModel):
    """Monte Carlo section."""

    experiment: constants.Experiment = constants.Experiment.SESSION
    eta: float = 0.0
    m_samples: Optional[int] = None

    @field_validator("eta")
    @classmethod
    def check_eta(cls, value: float) -> float:
        """Check that the label-flip probability is a probability below 1/2."""
        if not 0.0 <= value < 0.5:
            raise ValueError(f"eta must be within [0, 1/2), got {value}")
        return value

    @field_validator("m_samples")
    @classmethod
    def check_m_samples(cls, value: Optional[int]) -> Optional[int]:
        """Check that the sample count is not negative."""
        if value is not None and value < 0:
            raise ValueError(f"m_samples must be >= 0, got {value}")
        return value


class RunConfig(BaseModel):
    """Global simulator configuration."""

    oracle: str = constants.DEFAULT_ORACLE_RECORD
    session: ProtocolConfig = ProtocolConfig()
    attack: AttackConfig = AttackConfig()
    trials: int = 1
    seed: int = 0
    output_path: Optional[str] = None
    trace_path: Optional[str] = None
    format: constants.OutputFormat = constants.OutputFormat.JSON
    sweep: SweepConfig = SweepConfig()
    montecarlo: MonteCarloConfig = MonteCarloConfig()
    logging_config: LoggingConfig = LoggingConfig()

    def __init__(self, data: Optional[dict] = None) -> None:
        """Initialize configuration and perform basic validation."""
        super().__init__()
        if data is None:
            return
        checks.require_mapping(data, "configuration")
        self.oracle = str(data.get("oracle", constants.DEFAULT_ORACLE_RECORD))
        self.session = ProtocolConfig(data.get("session", {}))
        self.attack = AttackConfig(data.get("attack", {}))
        self.trials = _convert(data, "trials", self.trials, int, "configuration")
        self.seed = _convert(data, "seed", self.seed, int, "configuration")
        self.output_path = data.get("output_path", None)
        self.trace_path = data.get("trace_path", None)
        output_format = data.get("format", constants.OutputFormat.JSON)
        if output_format not in list(constants.OutputFormat):
            raise checks.InvalidConfigurationError(
                f"invalid format '{output_format}', valid formats are "
                f"{[str(f) for f in constants.OutputFormat]}"
            )
        self.format = constants.OutputFormat(output_format)
        self.sweep = SweepConfig(data.get("sweep", None))
        self.montecarlo = MonteCarloConfig(
            **checks.require_mapping(data.get("montecarlo", {}), "montecarlo")
        )
        self.logging_config = LoggingConfig(
            **checks.require_mapping(data.get("logging_config", {}), "logging_config")
        )

    def oracle_spec(self) -> OracleSpec:
        """Parse the oracle record."""
        try:
            return OracleSpec.parse(self.oracle)
        except OracleSpecError as e:
            raise checks.InvalidConfigurationError(f"invalid oracle: {e}") from e

    def validate_yaml(self) -> None:
        """Validate all configurations."""
        spec = self.oracle_spec()
        self.session.validate_yaml(spec.m)
        self.attack.validate_yaml()
        self.sweep.validate_yaml()
        if self.trials < 1:
            raise checks.InvalidConfigurationError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise checks.InvalidConfigurationError(
                f"seed must be a 64-bit unsigned integer, got {self.seed}"
            )
        for path, desc in ((self.output_path, "output_path"), (self.trace_path, "trace_path")):
            if path is not None:
                checks.parent_dir_check(path, desc)
