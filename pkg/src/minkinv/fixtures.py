"""Regression matrices with known Minkowski-inverse behavior.

Three hand-picked integer matrices anchor the test suite:

* ``nonexistent_5x4``: rank 2, but both metric Gram products collapse to
  rank 1 (index one), so the Minkowski inverse does not exist even though
  the Gram products are index-one.
* ``existent_5x5``: rank 3 with a fully existent Minkowski inverse whose
  entries are small integers (``existent_5x5_minkinv``).
* ``pseudo_candidate_5x5``: a {1,2}-inverse of ``existent_5x5`` with the
  right null space but the wrong range; it satisfies equations (1), (2) and
  (3m) yet is not the Minkowski inverse.  Useful as a hard negative for any
  decision procedure.

The matrices are stored exactly (integers and short decimals); the JSON
fixture files shipped in ``fixtures/`` hold the same data in the CLI format.
"""

from __future__ import annotations

import numpy as np


def nonexistent_5x4() -> np.ndarray:
    """Rank-2 matrix whose Minkowski inverse does not exist."""
    return np.array([
        [1, 0, 1, 1],
        [0, 0, 1, 0],
        [1, 0, 1, 1],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
    ], dtype=np.complex128)


def existent_5x5() -> np.ndarray:
    """Rank-3 matrix with an existent, integer-valued Minkowski inverse."""
    return np.array([
        [1, 1, 1, 0, 1],
        [0, 1, 0, 1, 0],
        [1, 1, 0, 0, 1],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
    ], dtype=np.complex128)


def existent_5x5_minkinv() -> np.ndarray:
    """The Minkowski inverse of :func:`existent_5x5`."""
    return np.array([
        [0, 1, -2, 0, 0],
        [0, 0, 1, 0, 0],
        [1, 0, -1, 0, 0],
        [0, 1, -1, 0, 0],
        [0, -1, 2, 0, 0],
    ], dtype=np.complex128)


def pseudo_candidate_5x5() -> np.ndarray:
    """A {1,2}-inverse of :func:`existent_5x5` that is not its Minkowski inverse.

    Its null space matches N(A~) but its range is not contained in R(A~), so
    range-based checks must reject it while the residuals of equations (1),
    (2) and (3m) all pass.
    """
    return np.array([
        [0, -0.2, 0.4, 0, 0],
        [0, 0.4, 0.2, 0, 0],
        [1, 0, -1, 0, 0],
        [0, 0.6, -0.2, 0, 0],
        [0, -0.2, 0.4, 0, 0],
    ], dtype=np.complex128)


# Singular values of existent_5x5, four significant digits, for regression.
EXISTENT_5X5_SINGULAR_VALUES = (2.635, 1.2685, 0.66897)
