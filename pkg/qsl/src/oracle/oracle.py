"""Classical-quantum hybrid oracle built from Reed-Muller coefficients.

Bit j of a monomial index k (least significant first) selects input bit x_(j+1),
so k = 0 is the empty monomial, k = 1 is x_1, k = 2 is x_2 and k = 3 is x_1 x_2.
The integer form of an input uses the same order: x_1 is its lowest bit.
"""

import logging
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cache

import numpy as np

from qsl import constants
from qsl.src.quantum.gates import I_SIGMA_Y, PAULI_Z, Gate, apply_gate, custom_gate
from qsl.src.quantum.state import QuantumState, embed_operator

logger = logging.getLogger(__name__)


class OracleSpecError(ValueError):
    """Oracle record or input is invalid."""


@dataclass(frozen=True)
class ClassicalInput:
    """Classical n-bit input (x_1, ..., x_n)."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate the bits."""
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise OracleSpecError("classical input must have at least one bit")
        if any(b not in (0, 1) for b in bits):
            raise OracleSpecError(f"classical input bits must be 0 or 1, got {bits}")
        object.__setattr__(self, "bits", bits)

    @property
    def n(self) -> int:
        """Return the input width."""
        return len(self.bits)

    @property
    def as_int(self) -> int:
        """Return the integer form with x_1 as the lowest bit."""
        return sum(bit << j for j, bit in enumerate(self.bits))

    @property
    def is_zero(self) -> bool:
        """Check for the all-zero input."""
        return not any(self.bits)

    @classmethod
    def from_int(cls, value: int, n: int) -> "ClassicalInput":
        """Build the input whose integer form is value."""
        if not 0 <= value < 2**n:
            raise OracleSpecError(f"input {value} out of range for width {n}")
        return cls(tuple((value >> j) & 1 for j in range(n)))

    @classmethod
    def parse(cls, text: str) -> "ClassicalInput":
        """Parse a bitstring written x_1 first."""
        if not re.fullmatch(r"[01]+", text):
            raise OracleSpecError(f"'{text}' is not a bitstring")
        return cls(tuple(int(c) for c in text))

    def __str__(self) -> str:
        """Return the bitstring x_1 ... x_n."""
        return "".join(str(b) for b in self.bits)


def all_inputs(n: int) -> Iterator[ClassicalInput]:
    """Enumerate all inputs of width n in ascending integer order."""
    for value in range(2**n):
        yield ClassicalInput.from_int(value, n)


_RECORD_PATTERN = re.compile(r"^\s*n=(\d+)\s+m=(\d+)\s+a=([01,]+)\s*$")


@dataclass(frozen=True)
class OracleSpec:
    """Hidden concept(s) given as Reed-Muller coefficient vectors.

    Attributes:
        n: input bit width, 1..6
        coefficients: one vector of 2^n bits per label, in ascending k order
    """

    n: int
    coefficients: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        """Validate dimensions and bits."""
        if not 1 <= self.n <= constants.MAX_INPUT_BITS:
            raise OracleSpecError(
                f"input width must be within 1..{constants.MAX_INPUT_BITS}, got {self.n}"
            )
        coefficients = tuple(tuple(int(b) for b in vector) for vector in self.coefficients)
        if not coefficients:
            raise OracleSpecError("oracle needs at least one label")
        if len(coefficients) > constants.MAX_QUBITS:
            raise OracleSpecError(
                f"oracle supports at most {constants.MAX_QUBITS} labels, "
                f"got {len(coefficients)}"
            )
        for index, vector in enumerate(coefficients):
            if len(vector) != 2**self.n:
                raise OracleSpecError(
                    f"coefficient vector {index} has length {len(vector)}, "
                    f"expected {2**self.n}"
                )
            if any(b not in (0, 1) for b in vector):
                raise OracleSpecError(f"coefficient vector {index} is not binary")
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def m(self) -> int:
        """Return the number of labels."""
        return len(self.coefficients)

    @classmethod
    def single(cls, n: int, coefficients: Sequence[int]) -> "OracleSpec":
        """Build a binary (one label) oracle."""
        return cls(n, (tuple(coefficients),))

    @classmethod
    def parse(cls, text: str) -> "OracleSpec":
        """Parse a record such as "n=2 m=1 a=0111".

        Multi-label records separate the coefficient strings with commas,
        e.g. "n=2 m=2 a=0111,0001".
        """
        match = _RECORD_PATTERN.match(text)
        if match is None:
            raise OracleSpecError(f"malformed oracle record '{text}'")
        n, m = int(match.group(1)), int(match.group(2))
        vectors = match.group(3).split(",")
        if len(vectors) != m:
            raise OracleSpecError(
                f"oracle record declares m={m} but lists {len(vectors)} coefficient vector(s)"
            )
        if any(not v for v in vectors):
            raise OracleSpecError(f"empty coefficient vector in '{text}'")
        return cls(n, tuple(tuple(int(c) for c in v) for v in vectors))

    def serialize(self) -> str:
        """Return the text record of this oracle."""
        vectors = ",".join(coefficients_to_bitstring(v) for v in self.coefficients)
        return f"n={self.n} m={self.m} a={vectors}"

    def __str__(self) -> str:
        """Return the text record."""
        return self.serialize()


def coefficients_to_bitstring(coefficients: Sequence[int]) -> str:
    """Write a coefficient vector as a bitstring in ascending k order."""
    return "".join(str(int(b)) for b in coefficients)


def _check_width(spec: OracleSpec, x: ClassicalInput) -> None:
    if x.n != spec.n:
        raise OracleSpecError(f"input width {x.n} does not match oracle width {spec.n}")


def _check_label(spec: OracleSpec, label_index: int) -> None:
    if not 0 <= label_index < spec.m:
        raise OracleSpecError(
            f"label index {label_index} out of range for {spec.m} label(s)"
        )


def monomial_satisfied(k: int, x: ClassicalInput) -> bool:
    """Check whether every input bit in the support of monomial k is 1."""
    if not 0 <= k < 2**x.n:
        raise OracleSpecError(f"monomial index {k} out of range for width {x.n}")
    return (k & x.as_int) == k


def satisfied_monomials(x: ClassicalInput) -> list[int]:
    """Return the satisfied monomial indices in ascending order."""
    return [k for k in range(2**x.n) if monomial_satisfied(k, x)]


@cache
def monomial_matrix(n: int) -> np.ndarray:
    """Return the 0/1 matrix M[x, k] = monomial k satisfied by input x.

    A truth table of coefficient vector a is (M @ a) mod 2.
    """
    indices = np.arange(2**n)
    matrix = (indices[:, None] & indices[None, :]) == indices[None, :]
    matrix = matrix.astype(np.int64)
    matrix.flags.writeable = False
    return matrix


def reed_muller_eval(spec: OracleSpec, label_index: int, x: ClassicalInput) -> int:
    """XOR of a_k over all monomials k satisfied by x."""
    _check_width(spec, x)
    _check_label(spec, label_index)
    vector = spec.coefficients[label_index]
    value = 0
    for k in satisfied_monomials(x):
        value ^= vector[k]
    return value


def oracle_circuit(spec: OracleSpec, x: ClassicalInput, label_index: int) -> list[Gate]:
    """Gates fired on one label qubit, in ascending monomial order.

    Each satisfied monomial k fires i*sigma_y when a_k = 1 and sigma_z otherwise.
    """
    _check_width(spec, x)
    _check_label(spec, label_index)
    vector = spec.coefficients[label_index]
    return [I_SIGMA_Y if vector[k] else PAULI_Z for k in satisfied_monomials(x)]


@cache
def _register_gate(spec: OracleSpec, x_int: int) -> Gate:
    x = ClassicalInput.from_int(x_int, spec.n)
    full = np.eye(2**spec.m, dtype=complex)
    for label_index in range(spec.m):
        slot = np.eye(2, dtype=complex)
        for gate in oracle_circuit(spec, x, label_index):
            slot = gate.matrix @ slot
        full = embed_operator(slot, spec.m, label_index) @ full
    return custom_gate(full)


def oracle_apply(
    spec: OracleSpec, x: ClassicalInput, transit: QuantumState
) -> QuantumState:
    """Run the gate cascade of every label slot on the transit register.

    Label slot i is qubit i of the transit register.
    """
    _check_width(spec, x)
    if transit.num_qubits != spec.m:
        raise OracleSpecError(
            f"oracle with {spec.m} label(s) needs a {spec.m}-qubit transit, "
            f"got {transit.num_qubits}"
        )
    return apply_gate(transit, _register_gate(spec, x.as_int), 0)


def oracle_truth_table(spec: OracleSpec) -> dict[ClassicalInput, tuple[int, ...]]:
    """Evaluate every label on every input."""
    table = truth_table_array(spec)
    return {
        x: tuple(int(v) for v in table[x.as_int]) for x in all_inputs(spec.n)
    }


def truth_table_array(spec: OracleSpec) -> np.ndarray:
    """Return the truth table as an array of shape (2^n, m) indexed by x.as_int."""
    return (monomial_matrix(spec.n) @ np.array(spec.coefficients).T) % 2
