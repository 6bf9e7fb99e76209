"""Command-line surface: bounds, run, sweep and montecarlo."""

import argparse
import logging
import sys
from collections import Counter
from collections.abc import Callable, Sequence
from typing import Any, Optional

import numpy as np
import yaml

from qsl import constants
from qsl.app.metrics import metrics
from qsl.app.models.models import (
    BoundsReport,
    PacExperimentSummary,
    SessionExperimentSummary,
    SessionReport,
    SessionSweepRow,
)
from qsl.src.adversary.factory import AttackFactory
from qsl.src.adversary.profile import measured_profile
from qsl.src.adversary.strategies.strategy import AttackStrategy
from qsl.src.adversary.sweep import standard_sweep
from qsl.src.bounds.bounds import (
    PacParams,
    sample_complexity_noiseless,
    sample_complexity_noisy,
)
from qsl.src.learning.pac import learner_errors, summarize_pac
from qsl.src.protocol.session import SessionOutcome, SessionStatus, run_session
from qsl.src.protocol.trace import write_trace
from qsl.utils import reports
from qsl.utils.checks import InvalidConfigurationError
from qsl.utils.config import config
from qsl.utils.logging_configurator import configure_logging
from qsl.utils.parallel import ordered_map
from qsl.utils.seeding import derive_seed, make_rng, trial_rng
from qsl.version import __version__

logger = logging.getLogger(__name__)

EXIT_CODES = {
    SessionStatus.COMPLETED: constants.ExitCode.COMPLETED,
    SessionStatus.ABORTED_R1: constants.ExitCode.ABORTED_R1,
    SessionStatus.QUIT_R2: constants.ExitCode.QUIT_R2,
}

SESSION_SWEEP_COLUMNS = tuple(SessionSweepRow.model_fields)

# failures that mean bad input rather than a bug
HANDLED_ERRORS = (InvalidConfigurationError, ValueError, OSError, yaml.YAMLError)


def _u64(value: str) -> int:
    seed = int(value, 0)
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be a 64-bit unsigned integer: {value}")
    return seed


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer: {value}")
    return number


def _common_flags(parser: argparse.ArgumentParser, default_format: str) -> None:
    parser.add_argument("--config", metavar="PATH", help="YAML configuration file")
    parser.add_argument("--seed", type=_u64, help="master seed (overrides the config)")
    parser.add_argument("--trials", type=_positive, help="number of trials")
    parser.add_argument("--out", metavar="PATH", help="report file instead of stdout")
    parser.add_argument(
        "--format",
        choices=[str(f) for f in constants.OutputFormat],
        default=None,
        help=f"report format (default: {default_format})",
    )
    parser.add_argument(
        "--metrics-out", metavar="PATH", help="write prometheus metrics to this file"
    )
    parser.add_argument("--log-level", help="application log level, e.g. debug")


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the simulator."""
    parser = argparse.ArgumentParser(
        prog="qsl-sim", description="Quantum secure sampling protocol simulator"
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    bounds = commands.add_parser("bounds", help="sample complexities and secure window")
    bounds.add_argument("--epsilon", type=float, default=0.1)
    bounds.add_argument("--delta", type=float, default=0.1)
    bounds.add_argument("--h-size", type=int, default=16)
    bounds.add_argument("--m", type=int, default=1, help="label count")
    _common_flags(bounds, constants.OutputFormat.CSV)

    run = commands.add_parser("run", help="run one protocol session")
    _common_flags(run, constants.OutputFormat.JSON)

    sweep = commands.add_parser("sweep", help="contamination of attacks over a grid")
    _common_flags(sweep, constants.OutputFormat.CSV)

    montecarlo = commands.add_parser("montecarlo", help="repeated PAC or session trials")
    _common_flags(montecarlo, constants.OutputFormat.JSON)
    return parser


def _load(args: argparse.Namespace) -> None:
    if args.config is None:
        config.reload_empty()
    else:
        config.reload_from_yaml_file(args.config)
    configure_logging(config.logging_config, args.log_level)
    logger.debug("configuration loaded from %s", args.config or "defaults")


def _format(args: argparse.Namespace, default: str) -> str:
    if args.format is not None:
        return args.format
    if args.config is not None:
        return config.config.format
    return default


def _out(args: argparse.Namespace) -> Optional[str]:
    return args.out if args.out is not None else config.config.output_path


def _master_seed(args: argparse.Namespace) -> int:
    return args.seed if args.seed is not None else config.config.seed


def _trials(args: argparse.Namespace) -> int:
    return args.trials if args.trials is not None else config.config.trials


def _render(rows: Sequence[dict[str, Any]], columns: Sequence[str], fmt: str) -> str:
    if fmt == constants.OutputFormat.CSV:
        return reports.to_csv(rows, columns)
    return reports.to_json(list(rows))


def cmd_bounds(args: argparse.Namespace) -> int:
    """Print the sample complexities and windows of one PAC task.

    The task comes from the flags; a --config file is still loaded and
    validated and supplies logging, the report format and the output path.
    """
    _load(args)
    report = BoundsReport.build(PacParams(args.epsilon, args.delta, args.h_size), args.m)
    fmt = _format(args, constants.OutputFormat.CSV)
    row = report.model_dump()
    if fmt == constants.OutputFormat.CSV:
        text = reports.to_csv([row], tuple(BoundsReport.model_fields))
    else:
        text = reports.to_json(row)
    reports.emit(text, _out(args))
    return constants.ExitCode.COMPLETED


def cmd_run(args: argparse.Namespace) -> int:
    """Run one session and report its outcome; the exit code encodes the status."""
    _load(args)
    seed = args.seed if args.seed is not None else config.session_config.seed
    attack = config.attack
    outcome = run_session(config.session(seed), config.oracle, attack)
    report = SessionReport.from_outcome(outcome, seed, attack.label, attack.parameter)
    reports.emit(reports.to_json(report.model_dump()), _out(args))
    if outcome.trace:
        write_trace(outcome.trace, config.config.trace_path)
    return EXIT_CODES[outcome.status]


def _sweep_strategies() -> list[AttackStrategy]:
    spec = config.oracle
    strategies = []
    for entry in config.sweep_config.attacks:
        strategies.extend(
            AttackFactory.from_config(attack, spec.m) for attack in entry.attacks()
        )
    if config.sweep_config.standard:
        if spec.m != 1:
            raise InvalidConfigurationError("the standard sweep needs a single-label oracle")
        strategies.extend(standard_sweep())
    if not strategies:
        raise InvalidConfigurationError("sweep has no attack to run")
    return strategies


def cmd_sweep(args: argparse.Namespace) -> int:
    """One row per (strategy, parameter, trial): session status and measured profile."""
    _load(args)
    strategies = _sweep_strategies()
    trials = _trials(args)
    master_seed = _master_seed(args)
    spec = config.oracle
    rounds = config.sweep_config.rounds
    tolerance = config.sweep_config.tolerance
    jobs = [(s, t) for s in range(len(strategies)) for t in range(trials)]

    def run_one(index: int) -> dict[str, Any]:
        strategy_index, trial = jobs[index]
        strategy = strategies[strategy_index]
        seed = derive_seed(master_seed, index)
        session_config = config.session(seed)
        outcome = run_session(session_config, spec, strategy)
        profile = measured_profile(strategy, spec, rounds, trial_rng(seed, 1))
        row = SessionSweepRow(
            strategy=strategy.label,
            parameter=strategy.parameter,
            trial=trial,
            seed=seed,
            status=str(outcome.status),
            eta_a_samples=profile.eta_a_samples,
            eta_a_test=profile.eta_a_test,
            eta_e_samples=profile.eta_e_samples,
            eve_coverage=profile.eve_coverage,
            eta_a_effective=profile.eta_a_effective,
            eta_e_effective=profile.eta_e_effective,
            violation_flag=int(
                profile.violates_no_broadcast(session_config.critical, tolerance)
            ),
        )
        return row.model_dump()

    rows = ordered_map(run_one, range(len(jobs)), "sweep")
    violations = sum(row["violation_flag"] for row in rows)
    if violations:
        logger.warning("%d sweep row(s) beat the no-broadcast limit", violations)
    fmt = _format(args, constants.OutputFormat.CSV)
    reports.emit(_render(rows, SESSION_SWEEP_COLUMNS, fmt), _out(args))
    return constants.ExitCode.COMPLETED


def _pac_summary(trials: int, master_seed: int) -> PacExperimentSummary:
    section = config.montecarlo_config
    p = config.session_config.pac.to_params()
    m_samples = section.m_samples
    if m_samples is None:
        m_samples = (
            sample_complexity_noiseless(p)
            if section.eta == 0
            else sample_complexity_noisy(p, section.eta)
        )
    errors = learner_errors(
        p, config.oracle, section.eta, m_samples, trials, make_rng(master_seed), progress=True
    )
    summary = summarize_pac(p, errors)
    return PacExperimentSummary.from_summary(summary, master_seed, section.eta, m_samples)


def _session_summary(trials: int, master_seed: int) -> SessionExperimentSummary:
    spec = config.oracle
    attack = config.attack

    def run_one(index: int) -> SessionOutcome:
        return run_session(config.session(derive_seed(master_seed, index)), spec, attack)

    outcomes = ordered_map(run_one, range(trials), "sessions")
    counts = Counter(str(outcome.status) for outcome in outcomes)
    etas = np.array([outcome.eta_estimate for outcome in outcomes])
    errors = [
        h.exact_error
        for outcome in outcomes
        for h in outcome.hypotheses or []
        if h.exact_error is not None
    ]
    return SessionExperimentSummary(
        trials=trials,
        seed=master_seed,
        attack=attack.label,
        status_counts={str(status): counts.get(str(status), 0) for status in SessionStatus},
        completion_rate=counts.get(str(SessionStatus.COMPLETED), 0) / trials,
        detection_rate=counts.get(str(SessionStatus.ABORTED_R1), 0) / trials,
        quit_rate=counts.get(str(SessionStatus.QUIT_R2), 0) / trials,
        mean_eta_estimate=float(etas.mean()),
        eta_std_error=float(etas.std(ddof=1) / np.sqrt(trials)) if trials > 1 else 0.0,
        mean_sample_contamination=float(
            np.mean([outcome.samples.contamination_rate for outcome in outcomes])
        ),
        mean_generalization_error=float(np.mean(errors)) if errors else None,
    )


def _flatten(record: dict[str, Any]) -> dict[str, Any]:
    flat = {}
    for key, value in record.items():
        if isinstance(value, dict):
            flat.update({f"{key}_{inner}": v for inner, v in value.items()})
        else:
            flat[key] = value
    return flat


def cmd_montecarlo(args: argparse.Namespace) -> int:
    """Aggregate repeated PAC experiments or sessions."""
    _load(args)
    trials = _trials(args)
    master_seed = _master_seed(args)
    summary: PacExperimentSummary | SessionExperimentSummary
    if config.montecarlo_config.experiment == constants.Experiment.PAC:
        summary = _pac_summary(trials, master_seed)
    else:
        summary = _session_summary(trials, master_seed)
    record = summary.model_dump()
    if _format(args, constants.OutputFormat.JSON) == constants.OutputFormat.CSV:
        row = _flatten(record)
        text = reports.to_csv([row], tuple(row))
    else:
        text = reports.to_json(record)
    reports.emit(text, _out(args))
    return constants.ExitCode.COMPLETED


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "bounds": cmd_bounds,
    "run": cmd_run,
    "sweep": cmd_sweep,
    "montecarlo": cmd_montecarlo,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run the command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors, which would read as an R.1 abort
        return constants.ExitCode.COMPLETED if e.code == 0 else constants.ExitCode.ERROR
    command = COMMANDS[args.command]
    try:
        with metrics.trials_duration_seconds.labels(command=args.command).time():
            exit_code = command(args)
    except HANDLED_ERRORS as e:
        logger.error("%s failed: %s", args.command, e)
        return constants.ExitCode.ERROR
    if args.metrics_out is not None:
        try:
            metrics.dump_metrics(args.metrics_out)
        except OSError as e:
            logger.error("cannot write metrics to %s: %s", args.metrics_out, e)
            return constants.ExitCode.ERROR
    return exit_code


def run() -> None:
    """Console script entry point."""
    sys.exit(main())
