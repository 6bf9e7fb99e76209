"""Unit tests for per-trial random streams."""

from qsl.utils.seeding import derive_seed, make_rng, trial_rng


def test_derive_seed_is_deterministic():
    """Check that the same master seed and index give the same seed."""
    assert derive_seed(42, 3) == derive_seed(42, 3)
    assert 0 <= derive_seed(42, 3) < 2**64


def test_derive_seed_separates_streams():
    """Check that indices and master seeds give distinct seeds."""
    seeds = {derive_seed(42, index) for index in range(100)}
    assert len(seeds) == 100
    assert derive_seed(42, 0) != derive_seed(43, 0)


def test_master_seed_is_masked():
    """Check that master seeds are read modulo 2^64."""
    assert derive_seed(-1, 0) == derive_seed(2**64 - 1, 0)


def test_make_rng():
    """Check that equal seeds give equal streams."""
    first = make_rng(7).random(5)
    second = make_rng(7).random(5)
    assert first.tolist() == second.tolist()
    assert make_rng(8).random(5).tolist() != first.tolist()


def test_trial_rng():
    """Check that trial streams derive from the master seed and the index."""
    expected = make_rng(derive_seed(11, 4)).integers(1000, size=8)
    assert trial_rng(11, 4).integers(1000, size=8).tolist() == expected.tolist()
