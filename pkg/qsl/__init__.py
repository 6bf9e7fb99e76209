"""Quantum secure learning simulator."""

from qsl.utils.config import config

# make config submodule easily importable by using
# from qsl import config
__all__ = ["config"]
