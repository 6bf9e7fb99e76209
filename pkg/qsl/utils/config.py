"""Configuration loader."""

import sys
import traceback
from io import TextIOBase
from typing import Any, Optional

import yaml

import qsl.app.models.config as config_model
from qsl.src.adversary.factory import AttackFactory
from qsl.src.adversary.strategies.strategy import AttackStrategy
from qsl.src.oracle.oracle import OracleSpec
from qsl.src.protocol.session_config import SessionConfig


class AppConfig:
    """Singleton class to load and store the configuration."""

    _instance = None

    def __new__(cls, *args: Any, **kwargs: Any) -> "AppConfig":
        """Create a new instance of the class."""
        if not isinstance(cls._instance, cls):
            cls._instance = super().__new__(cls, *args, **kwargs)
        return cls._instance

    def __init__(self) -> None:
        """Initialize the class instance."""
        self.config = config_model.RunConfig()
        self._oracle: Optional[OracleSpec] = None
        self._attack: Optional[AttackStrategy] = None

    @property
    def session_config(self) -> config_model.ProtocolConfig:
        """Return the session section."""
        return self.config.session

    @property
    def attack_config(self) -> config_model.AttackConfig:
        """Return the attack section."""
        return self.config.attack

    @property
    def sweep_config(self) -> config_model.SweepConfig:
        """Return the sweep section."""
        return self.config.sweep

    @property
    def montecarlo_config(self) -> config_model.MonteCarloConfig:
        """Return the Monte Carlo section."""
        return self.config.montecarlo

    @property
    def logging_config(self) -> config_model.LoggingConfig:
        """Return the logging configuration."""
        return self.config.logging_config

    @property
    def oracle(self) -> OracleSpec:
        """Return the parsed oracle."""
        if self._oracle is None:
            self._oracle = self.config.oracle_spec()
        return self._oracle

    @property
    def attack(self) -> AttackStrategy:
        """Return the configured attack strategy, sized for the oracle's labels."""
        if self._attack is None:
            self._attack = AttackFactory.from_config(self.attack_config, self.oracle.m)
        return self._attack

    def session(self, seed: Optional[int] = None) -> SessionConfig:
        """Return the protocol-level session parameters, optionally reseeded."""
        return self.session_config.to_session_config(self.oracle.m, seed)

    def reload_empty(self) -> None:
        """Reload the configuration with empty values."""
        self.config = config_model.RunConfig()
        self._oracle = None
        self._attack = None

    @staticmethod
    def _load_config_from_yaml_stream(stream: TextIOBase) -> config_model.RunConfig:
        """Load configuration from a YAML stream."""
        data = yaml.safe_load(stream)
        config = config_model.RunConfig(data)
        config.validate_yaml()
        return config

    def reload_from_yaml_file(self, config_file: str) -> None:
        """Reload the configuration from the YAML file."""
        try:
            with open(config_file, encoding="utf-8") as f:
                self.config = self._load_config_from_yaml_stream(f)
            # drop objects built from the previous configuration
            self._oracle = None
            self._attack = None
        except Exception as e:
            print(f"Failed to load config file {config_file}: {e!s}", file=sys.stderr)
            print(traceback.format_exc(), file=sys.stderr)
            raise


config: AppConfig = AppConfig()
