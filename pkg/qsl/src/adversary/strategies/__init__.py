"""Attack strategies."""

# NOTE: In order to register all strategies automatically, we are importing
# every module of this package.

import importlib
import pkgutil


def import_strategies() -> None:
    """Import all strategy modules from this package."""
    for module in pkgutil.iter_modules(__path__):
        if not module.name.startswith("__"):
            importlib.import_module(f"{__name__}.{module.name}")


import_strategies()
