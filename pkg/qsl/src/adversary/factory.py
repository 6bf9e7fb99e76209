"""Attack strategy factory."""

import logging

from qsl.app.models.config import AttackConfig
from qsl.src.adversary.strategies import import_strategies
from qsl.src.adversary.strategies.registry import AttackStrategiesRegistry
from qsl.src.adversary.strategies.strategy import (
    AttackConfigurationError,
    AttackStrategy,
)

logger = logging.getLogger(__name__)


class AttackFactory:
    """Attack strategy factory class."""

    @staticmethod
    def from_config(config: AttackConfig, transit_qubits: int = 1) -> AttackStrategy:
        """Create the attack strategy described by the configuration section."""
        if not AttackStrategiesRegistry.strategies:
            import_strategies()
        strategy_class = AttackStrategiesRegistry.strategies.get(config.type)
        if strategy_class is None:
            raise AttackConfigurationError(
                f"unknown attack type '{config.type}', supported types are "
                f"{sorted(AttackStrategiesRegistry.strategies)}"
            )
        strategy = strategy_class.from_config(config, transit_qubits)
        logger.debug("attack strategy %r created from %s", strategy, config)
        return strategy
