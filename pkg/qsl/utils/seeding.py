"""Random stream utilities.

Every trial of an experiment gets its own generator derived from the master
seed and the trial index, so results never depend on scheduling.
"""

import numpy as np

U64_MASK = 2**64 - 1


def derive_seed(master_seed: int, index: int) -> int:
    """Derive a 64-bit seed for the stream with the given index."""
    seq = np.random.SeedSequence(entropy=master_seed & U64_MASK, spawn_key=(index,))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed: int) -> np.random.Generator:
    """Create a generator from a 64-bit seed."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed & U64_MASK))


def trial_rng(master_seed: int, index: int) -> np.random.Generator:
    """Return the generator owned by one trial."""
    return make_rng(derive_seed(master_seed, index))
