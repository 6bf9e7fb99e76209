"""Finite hypothesis classes of Reed-Muller coefficient vectors."""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from qsl import constants
from qsl.src.learning.samples import LearningError
from qsl.src.oracle.oracle import monomial_matrix


@dataclass(frozen=True)
class HypothesisClass:
    """All coefficient vectors whose monomials have degree at most degree_cap.

    Members are indexed so that ascending index means lexicographically
    ascending coefficient vector (a_0 first); member 0 is the zero function.

    Attributes:
        n: input width
        degree_cap: maximal monomial degree, None for all Boolean functions
    """

    n: int
    degree_cap: Optional[int] = None

    def __post_init__(self) -> None:
        """Validate ranges."""
        if not 1 <= self.n <= constants.MAX_INPUT_BITS:
            raise LearningError(
                f"input width must be within 1..{constants.MAX_INPUT_BITS}, got {self.n}"
            )
        if self.degree_cap is not None and not 0 <= self.degree_cap <= self.n:
            raise LearningError(
                f"degree cap must be within 0..{self.n}, got {self.degree_cap}"
            )

    @classmethod
    def with_size(cls, n: int, h_size: int) -> "HypothesisClass":
        """Pick the degree cap whose class has exactly h_size members."""
        for cap in range(n + 1):
            candidate = cls(n, None if cap == n else cap)
            if candidate.size == h_size:
                return candidate
        sizes = [cls(n, cap).size for cap in range(n + 1)]
        raise LearningError(
            f"no degree-capped class over {n} input bit(s) has {h_size} members, "
            f"available sizes are {sizes}"
        )

    @cached_property
    def allowed_monomials(self) -> tuple[int, ...]:
        """Monomial indices members may use, ascending."""
        cap = self.n if self.degree_cap is None else self.degree_cap
        return tuple(k for k in range(2**self.n) if k.bit_count() <= cap)

    @property
    def size(self) -> int:
        """Return |H|."""
        return 2 ** len(self.allowed_monomials)

    def check_enumerable(self) -> None:
        """Refuse classes too large for exhaustive search."""
        if self.size > constants.MAX_HYPOTHESIS_CLASS_SIZE:
            raise LearningError(
                f"class of {self.size} hypotheses exceeds the exhaustive limit "
                f"{constants.MAX_HYPOTHESIS_CLASS_SIZE}"
            )

    @cached_property
    def _member_bits(self) -> np.ndarray:
        self.check_enumerable()
        count = len(self.allowed_monomials)
        indices = np.arange(self.size, dtype=np.int64)
        shifts = np.arange(count - 1, -1, -1, dtype=np.int64)
        return ((indices[:, None] >> shifts[None, :]) & 1).astype(np.int64)

    @cached_property
    def truth_tables(self) -> np.ndarray:
        """Outputs of every member on every input, shape (|H|, 2^n)."""
        monomials = monomial_matrix(self.n)[:, list(self.allowed_monomials)]
        tables = (self._member_bits @ monomials.T) % 2
        tables.flags.writeable = False
        return tables

    def coefficients(self, index: int) -> tuple[int, ...]:
        """Full coefficient vector (length 2^n) of a member."""
        if not 0 <= index < self.size:
            raise LearningError(f"member index {index} out of range for |H|={self.size}")
        vector = [0] * 2**self.n
        count = len(self.allowed_monomials)
        for position, k in enumerate(self.allowed_monomials):
            vector[k] = (index >> (count - 1 - position)) & 1
        return tuple(vector)

    def contains(self, coefficients: tuple[int, ...]) -> bool:
        """Check whether a coefficient vector is a member."""
        if len(coefficients) != 2**self.n:
            return False
        allowed = set(self.allowed_monomials)
        return all(not bit or k in allowed for k, bit in enumerate(coefficients))
