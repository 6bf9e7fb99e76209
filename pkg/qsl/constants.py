"""Constants used in business logic."""

from enum import IntEnum, StrEnum

# Numerical tolerances

# structural invariants of density operators and unitaries
STATE_TOLERANCE = 1e-10

# two states are considered equal when their fidelity is at least 1 - this value
STATE_EQUALITY_TOLERANCE = 1e-12

# dense matrices stay below 256x256
MAX_QUBITS = 8

# Oracle limits

# truth tables of at most 64 rows
MAX_INPUT_BITS = 6

# exhaustive ERM is feasible up to this many hypotheses
MAX_HYPOTHESIS_CLASS_SIZE = 2**16


# Cloning

# per-clone Bloch vector shrink of the symmetric universal 1->2 qubit cloner
CLONER_SHRINK = 2 / 3

# optimal per-clone fidelity of that cloner for pure inputs
CLONER_FIDELITY = 5 / 6


# Protocol defaults

DEFAULT_GAMMA = 0
DEFAULT_DELTA_MARGIN = 0.05
DEFAULT_CHANNEL_SHRINK = 1.0
DEFAULT_SESSION_SEED = 0

# target_samples value that asks the session to derive the target itself
TARGET_SAMPLES_AUTO = "auto"


class TestInputPolicy(StrEnum):
    """What Alice does when no fresh test input remains.

    RECYCLE forgets the used learning inputs and opens a new epoch, so a test
    input only avoids learning inputs of its own epoch. STRICT raises instead.
    """

    RECYCLE = "recycle"
    STRICT = "strict"


# Attack strategies
ATTACK_NONE = "none"
ATTACK_INTERCEPT_Z = "intercept_z"
ATTACK_INTERCEPT_X = "intercept_x"
ATTACK_INTERCEPT_RANDOM = "intercept_random"
ATTACK_UNIVERSAL_CLONE = "universal_clone"
ATTACK_GENERAL_PROBE = "general_probe"
SUPPORTED_ATTACK_TYPES = frozenset(
    {
        ATTACK_NONE,
        ATTACK_INTERCEPT_Z,
        ATTACK_INTERCEPT_X,
        ATTACK_INTERCEPT_RANDOM,
        ATTACK_UNIVERSAL_CLONE,
        ATTACK_GENERAL_PROBE,
    }
)

# attack types parameterized by an interception probability
INTERCEPT_ATTACK_TYPES = frozenset(
    {ATTACK_INTERCEPT_Z, ATTACK_INTERCEPT_X, ATTACK_INTERCEPT_RANDOM}
)


class ProbePreset(StrEnum):
    """Joint unitaries available for the general probe attack."""

    IDENTITY = "identity"
    CNOT = "cnot"
    CONTROLLED_RY = "controlled_ry"


# the general attack keeps its ancilla small
MAX_PROBE_ANCILLA_QUBITS = 2

# interception probabilities of the standard no-broadcast sweep
STANDARD_SWEEP_GRID = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)
DEFAULT_SWEEP_ROUNDS = 4000
DEFAULT_SWEEP_TOLERANCE = 0.01


# Monte Carlo experiments
class Experiment(StrEnum):
    """Kinds of Monte Carlo experiments."""

    PAC = "pac"
    SESSION = "session"


# significance of the one-sided binomial test against the 1 - delta floor
PAC_TEST_SIGNIFICANCE = 0.01


# CLI
class ExitCode(IntEnum):
    """Process exit codes of the CLI commands."""

    COMPLETED = 0
    ERROR = 1
    ABORTED_R1 = 2
    QUIT_R2 = 3


class OutputFormat(StrEnum):
    """Report formats."""

    CSV = "csv"
    JSON = "json"


# environment variable that caps worker threads
THREADS_ENV_VARIABLE = "QSL_SIM_THREADS"
DEFAULT_THREADS = 1

# floats in CSV reports are written with a fixed format to keep them byte-stable
CSV_FLOAT_FORMAT = "%.6f"

# default oracle used by sweeps that do not specify one
DEFAULT_ORACLE_RECORD = "n=2 m=1 a=0111"
