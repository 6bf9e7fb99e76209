"""Per-round trace of a session."""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any, Optional

from qsl.src.oracle.oracle import ClassicalInput
from qsl.src.protocol.protocol_error import ProtocolError
from qsl.src.protocol.rounds import RoundKind
from qsl.src.quantum.state import StateLabel, label_basis
from qsl.utils import reports

TRACE_COLUMNS = (
    "round_index",
    "kind",
    "input_bits",
    "sent_label",
    "measured_bits",
    "mismatch_flag",
)

# joins the per-slot labels of a multi-label round in one CSV cell
LABEL_SEPARATOR = "|"


@dataclass(frozen=True)
class RoundRecord:
    """One round as Alice saw it, plus diagnostics.

    Attributes:
        round_index: 0-based position in the session
        kind: learning or test round
        input: classical input sent to Bob
        sent_state_labels: prepared qubit per label slot
        measured: Alice's outcome per label slot
        mismatch: some outcome differs from the faithful one
        ground_truth_contaminated: a learning label is wrong (simulator knowledge only)
        epoch: freshness epoch of the test inputs
    """

    round_index: int
    kind: RoundKind
    input: ClassicalInput
    sent_state_labels: tuple[StateLabel, ...]
    measured: tuple[int, ...]
    mismatch: bool
    ground_truth_contaminated: bool
    epoch: int = 1

    def __post_init__(self) -> None:
        """Check that the labels belong to the round's basis."""
        if any(label_basis(label) != self.kind.basis for label in self.sent_state_labels):
            raise ProtocolError(
                f"{self.kind} round cannot carry labels {self.sent_state_labels}"
            )

    def as_row(self) -> dict[str, Any]:
        """Row of the trace CSV."""
        return {
            "round_index": self.round_index,
            "kind": str(self.kind),
            "input_bits": str(self.input),
            "sent_label": LABEL_SEPARATOR.join(str(label) for label in self.sent_state_labels),
            "measured_bits": "".join(str(bit) for bit in self.measured),
            "mismatch_flag": int(self.mismatch),
        }


def trace_csv(records: Iterable[RoundRecord]) -> str:
    """Render a trace as CSV text."""
    return reports.to_csv([record.as_row() for record in records], TRACE_COLUMNS)


def write_trace(records: Iterable[RoundRecord], path: Optional[str]) -> None:
    """Write a trace CSV to a file or stdout."""
    reports.emit(trace_csv(records), path)
