"""Empirical no-broadcast check over a family of attacks."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, Optional

from qsl import constants
from qsl.src.adversary.contamination import ContaminationProfile
from qsl.src.adversary.profile import measured_profile
from qsl.src.adversary.strategies.general_probe import GeneralProbe
from qsl.src.adversary.strategies.intercept_resend import (
    InterceptResendRandom,
    InterceptResendX,
    InterceptResendZ,
)
from qsl.src.adversary.strategies.strategy import AttackConfigurationError, AttackStrategy
from qsl.src.adversary.strategies.universal_clone import UniversalClone
from qsl.src.oracle.oracle import OracleSpec
from qsl.utils.parallel import ordered_map
from qsl.utils.seeding import trial_rng

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = (
    "strategy",
    "parameter",
    "eta_a_samples",
    "eta_a_test",
    "eta_e_samples",
    "eve_coverage",
    "eta_a_effective",
    "eta_e_effective",
    "violation_flag",
)


@dataclass(frozen=True)
class SweepRow:
    """Measured profile of one strategy and its no-broadcast verdict."""

    strategy: str
    parameter: Optional[float]
    profile: ContaminationProfile
    violation: bool

    def as_row(self) -> dict[str, Any]:
        """Row of the sweep CSV."""
        return {
            "strategy": self.strategy,
            "parameter": self.parameter,
            "eta_a_samples": self.profile.eta_a_samples,
            "eta_a_test": self.profile.eta_a_test,
            "eta_e_samples": self.profile.eta_e_samples,
            "eve_coverage": self.profile.eve_coverage,
            "eta_a_effective": self.profile.eta_a_effective,
            "eta_e_effective": self.profile.eta_e_effective,
            "violation_flag": int(self.violation),
        }


@dataclass(frozen=True)
class SweepReport:
    """Rows of a sweep in strategy order."""

    rows: list[SweepRow]
    eta_c: float
    tolerance: float

    @property
    def violations(self) -> list[SweepRow]:
        """Rows where both parties beat eta_c - tolerance."""
        return [row for row in self.rows if row.violation]


def standard_sweep(
    grid: Sequence[float] = constants.STANDARD_SWEEP_GRID,
) -> list[AttackStrategy]:
    """Intercept families over the grid, the universal cloner and the CNOT probe."""
    strategies: list[AttackStrategy] = []
    for family in (InterceptResendZ, InterceptResendX, InterceptResendRandom):
        strategies.extend(family(p) for p in grid)
    strategies.append(UniversalClone())
    strategies.append(GeneralProbe.preset(constants.ProbePreset.CNOT))
    return strategies


def no_broadcast_sweep(
    strategies: Sequence[AttackStrategy],
    rounds: int,
    eta_c: float,
    tol: float,
    master_seed: int = 0,
    spec: Optional[OracleSpec] = None,
    progress: bool = False,
) -> SweepReport:
    """Measure every strategy and flag those that beat the no-broadcast limit.

    A violation means eta_a_effective and eta_e_effective are both below
    eta_c - tol. Strategy i draws from the stream (master_seed, i).
    """
    if not strategies:
        raise AttackConfigurationError("sweep needs at least one strategy")
    oracle = spec if spec is not None else OracleSpec.parse(constants.DEFAULT_ORACLE_RECORD)

    def measure_one(index: int) -> SweepRow:
        strategy = strategies[index]
        profile = measured_profile(
            strategy, oracle, rounds, trial_rng(master_seed, index)
        )
        return SweepRow(
            strategy=strategy.label,
            parameter=strategy.parameter,
            profile=profile,
            violation=profile.violates_no_broadcast(eta_c, tol),
        )

    rows = ordered_map(
        measure_one, range(len(strategies)), "sweep" if progress else None
    )
    report = SweepReport(rows=rows, eta_c=eta_c, tolerance=tol)
    for row in report.violations:
        logger.warning(
            "%s (%s) beats the no-broadcast limit: %s",
            row.strategy,
            row.parameter,
            row.profile,
        )
    return report
