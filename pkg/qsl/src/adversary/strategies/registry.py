"""Attack strategies registry."""

import logging
from collections.abc import Callable
from typing import ClassVar

from qsl.src.adversary.strategies.strategy import AttackStrategy

logger = logging.getLogger(__name__)


class AttackStrategiesRegistry:
    """Registry for attack strategies."""

    strategies: ClassVar[dict[str, type[AttackStrategy]]] = {}

    @classmethod
    def register(cls, attack_type: str, strategy: Callable) -> None:
        """Register attack strategy."""
        if not isinstance(strategy, type) or not issubclass(strategy, AttackStrategy):
            raise TypeError(f"AttackStrategy subclass required, got '{type(strategy)}'")
        cls.strategies[attack_type] = strategy
        logger.debug("attack strategy '%s' registered", attack_type)


def register_attack_as(attack_type: str) -> Callable:
    """Register attack strategy in the `AttackStrategiesRegistry`.

    Example:
    ```python
    @register_attack_as("intercept_z")
    class InterceptResendZ(AttackStrategy):
       pass
    ```
    """

    def decorator(cls: type[AttackStrategy]) -> type[AttackStrategy]:
        cls.attack_type = attack_type
        AttackStrategiesRegistry.register(attack_type, cls)
        return cls

    return decorator
