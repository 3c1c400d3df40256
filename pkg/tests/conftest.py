"""Shared helpers for the test suite."""

import numpy as np
import pytest

from minkinv import GenKind, GenSpec, generate


def cgauss(rng, m, n):
    """Standard complex Gaussian matrix."""
    return (rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))) / np.sqrt(2.0)


def existent(m, n, r, seed, scale=1.0):
    """A seeded matrix whose Minkowski inverse exists with margin."""
    return generate(GenSpec(rows=m, cols=n, rank=r, kind=GenKind.EXISTENT,
                            seed=seed, scale=scale))


def block_existent(m, n, r, seed):
    return generate(GenSpec(rows=m, cols=n, rank=r, kind=GenKind.BLOCK_EXISTENT, seed=seed))


def isotropic(m, n, seed):
    return generate(GenSpec(rows=m, cols=n, rank=1, kind=GenKind.ISOTROPIC, seed=seed))


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
