"""Exhaustive check of the oracle circuit against Reed-Muller evaluation."""

import itertools

import pytest

from qsl.src.oracle.oracle import (
    OracleSpec,
    all_inputs,
    oracle_apply,
    reed_muller_eval,
)
from qsl.src.quantum.state import Basis, StateLabel, fidelity, label_for, make_state


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_matches_reed_muller(n):
    """Check every coefficient vector, input and Z label of width n."""
    for coefficients in itertools.product((0, 1), repeat=2**n):
        spec = OracleSpec.single(n, coefficients)
        for x in all_inputs(n):
            value = reed_muller_eval(spec, 0, x)
            for bit in (0, 1):
                answered = oracle_apply(spec, x, make_state(label_for(Basis.Z, bit)))
                expected = make_state(label_for(Basis.Z, bit ^ value))
                assert fidelity(answered, expected) >= 1 - 1e-10
            if x.is_zero:
                continue
            for label in (StateLabel.PLUS, StateLabel.MINUS):
                answered = oracle_apply(spec, x, make_state(label))
                assert fidelity(answered, make_state(label)) >= 1 - 1e-10
