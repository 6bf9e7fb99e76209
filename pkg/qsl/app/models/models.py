"""Data models representing the reports written by the CLI."""

from typing import Optional

from pydantic import BaseModel

from qsl.src.bounds.bounds import (
    PacParams,
    eta_c,
    sample_complexity_noiseless,
    secure_window,
)
from qsl.src.bounds.security import ova_sample_budget, single_machine_window
from qsl.src.learning.erm import LearnResult
from qsl.src.learning.pac import PacSummary
from qsl.src.protocol.session import SessionOutcome


class BoundsReport(BaseModel):
    """Sample complexities and the secure window of one PAC task.

    Attributes:
        epsilon: accuracy
        delta: confidence
        h_size: model complexity |H|
        m: label count
        m_noiseless: noiseless sample complexity
        m_b: lower end of the secure window
        m_c: upper end of the secure window
        eta_c: critical contamination for m labels
        width: m_c - m_b
        ratio: m_c / m_b
        single_machine_m_b: lower end for one m-qubit oracle over |H|^m
        single_machine_m_c: upper end for one m-qubit oracle over |H|^m
        ova_budget: samples for 2^m one-vs-all decisions
    """

    epsilon: float
    delta: float
    h_size: int
    m: int
    m_noiseless: int
    m_b: int
    m_c: int
    eta_c: float
    width: int
    ratio: float
    single_machine_m_b: int
    single_machine_m_c: int
    ova_budget: int

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "epsilon": 0.1,
                    "delta": 0.1,
                    "h_size": 16,
                    "m": 1,
                    "m_noiseless": 51,
                    "m_b": 1154,
                    "m_c": 2596,
                    "eta_c": 1 / 6,
                    "width": 1442,
                    "ratio": 2.2495667244367416,
                    "single_machine_m_b": 1154,
                    "single_machine_m_c": 2596,
                    "ova_budget": 2308,
                }
            ]
        }
    }

    @classmethod
    def build(cls, p: PacParams, m: int) -> "BoundsReport":
        """Compute every column for the given task."""
        window = secure_window(p, m)
        single = single_machine_window(p, m)
        return cls(
            epsilon=p.epsilon,
            delta=p.delta,
            h_size=p.h_size,
            m=m,
            m_noiseless=sample_complexity_noiseless(p),
            m_b=window.m_b,
            m_c=window.m_c,
            eta_c=eta_c(m),
            width=window.width,
            ratio=window.ratio,
            single_machine_m_b=single.m_b,
            single_machine_m_c=single.m_c,
            ova_budget=ova_sample_budget(p, m),
        )


class HypothesisReport(BaseModel):
    """Learned hypothesis of one label."""

    hypothesis: str
    empirical_error: float
    exact_error: Optional[float] = None

    @classmethod
    def from_result(cls, result: LearnResult) -> "HypothesisReport":
        """Serialize a learner result."""
        return cls(
            hypothesis=result.bitstring,
            empirical_error=result.empirical_error,
            exact_error=result.exact_error,
        )


class RaceReport(BaseModel):
    """Sample race between Alice and Eve at the end of a session."""

    alice_samples: int
    eve_samples: int
    eve_required: Optional[int] = None
    alice_certified: bool
    eve_can_learn: bool
    secure: bool


class SessionReport(BaseModel):
    """JSON record of a finished session."""

    status: str
    seed: int
    attack: str
    parameter: Optional[float] = None
    learning_rounds: int
    test_rounds: int
    test_mismatches: int
    eta_estimate: float
    r1_mismatches: Optional[int] = None
    r1_eta_estimate: Optional[float] = None
    samples: int
    contaminated_samples: int
    target_samples: int
    m_b: int
    m_c: int
    input_epochs: int
    hypotheses: Optional[list[HypothesisReport]] = None
    eve_samples: int
    eve_contamination: float
    eve_coverage: float
    race: Optional[RaceReport] = None

    @classmethod
    def from_outcome(
        cls,
        outcome: SessionOutcome,
        seed: int,
        attack: str,
        parameter: Optional[float] = None,
    ) -> "SessionReport":
        """Serialize a session outcome."""
        race = None
        if outcome.race is not None:
            race = RaceReport(
                alice_samples=outcome.race.alice_samples,
                eve_samples=outcome.race.eve_samples,
                eve_required=outcome.race.eve_required,
                alice_certified=outcome.race.alice_certified,
                eve_can_learn=outcome.race.eve_can_learn,
                secure=outcome.race.secure,
            )
        hypotheses = None
        if outcome.hypotheses is not None:
            hypotheses = [HypothesisReport.from_result(h) for h in outcome.hypotheses]
        return cls(
            status=str(outcome.status),
            seed=seed,
            attack=attack,
            parameter=parameter,
            learning_rounds=outcome.learning_rounds,
            test_rounds=outcome.test_rounds,
            test_mismatches=outcome.test_mismatches,
            eta_estimate=outcome.eta_estimate,
            r1_mismatches=outcome.r1_mismatches,
            r1_eta_estimate=outcome.r1_eta_estimate,
            samples=len(outcome.samples),
            contaminated_samples=outcome.samples.contaminated_count,
            target_samples=outcome.target_samples,
            m_b=outcome.window.m_b,
            m_c=outcome.window.m_c,
            input_epochs=outcome.input_epochs,
            hypotheses=hypotheses,
            eve_samples=outcome.eve_samples,
            eve_contamination=outcome.eve_contamination,
            eve_coverage=outcome.eve_coverage,
            race=race,
        )


class SessionSweepRow(BaseModel):
    """One (strategy, parameter, trial) row of the session sweep."""

    strategy: str
    parameter: Optional[float] = None
    trial: int
    seed: int
    status: str
    eta_a_samples: float
    eta_a_test: float
    eta_e_samples: float
    eve_coverage: float
    eta_a_effective: float
    eta_e_effective: float
    violation_flag: int


class PacExperimentSummary(BaseModel):
    """Summary of a PAC success-rate experiment."""

    experiment: str = "pac"
    trials: int
    seed: int
    eta: float
    m_samples: int
    successes: int
    success_rate: float
    floor: float
    p_value: float
    meets_floor: bool
    mean_error: float
    std_error: float

    @classmethod
    def from_summary(
        cls, summary: PacSummary, seed: int, eta: float, m_samples: int
    ) -> "PacExperimentSummary":
        """Serialize a PAC summary."""
        return cls(
            trials=summary.trials,
            seed=seed,
            eta=eta,
            m_samples=m_samples,
            successes=summary.successes,
            success_rate=summary.success_rate,
            floor=summary.floor,
            p_value=summary.p_value,
            meets_floor=summary.meets_floor,
            mean_error=summary.mean_error,
            std_error=summary.std_error,
        )


class SessionExperimentSummary(BaseModel):
    """Summary of repeated sessions.

    Attributes:
        status_counts: sessions per terminal status
        completion_rate: share of Completed sessions
        detection_rate: share of AbortedR1 sessions
        quit_rate: share of QuitR2 sessions
        mean_eta_estimate: mean of the per-session eta estimates
        eta_std_error: standard error of that mean
        mean_sample_contamination: mean ground-truth contamination of Alice's samples
        mean_generalization_error: mean exact error of completed sessions' hypotheses
    """

    experiment: str = "session"
    trials: int
    seed: int
    attack: str
    status_counts: dict[str, int]
    completion_rate: float
    detection_rate: float
    quit_rate: float
    mean_eta_estimate: float
    eta_std_error: float
    mean_sample_contamination: float
    mean_generalization_error: Optional[float] = None
