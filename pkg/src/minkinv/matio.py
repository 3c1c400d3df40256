"""Canonical JSON matrix file format used by the CLI and the fixtures.

Schema::

    {"rows": m, "cols": n, "data": [[re, im], ...]}

with ``data`` in row-major order, one ``[re, im]`` pair per entry, all values
finite.  Explicit pairs keep parsing unambiguous; no string-parsed complex
literals.  Writing then reading a matrix reproduces it bit for bit.
"""

from __future__ import annotations

import json

import numpy as np

from .dense_core import as_matrix
from .errors import FormatError


def matrix_to_payload(M) -> dict:
    """JSON-ready dict for a matrix."""
    M = as_matrix(M)
    m, n = M.shape
    flat = M.reshape(-1)
    return {
        "rows": m,
        "cols": n,
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_payload(obj) -> np.ndarray:
    """Parse the schema above into a complex matrix; FormatError on violations."""
    if not isinstance(obj, dict):
        raise FormatError("top-level JSON value must be an object")
    try:
        rows = obj["rows"]
        cols = obj["cols"]
        data = obj["data"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"missing field: {exc}") from exc
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        raise FormatError("rows and cols must be positive integers")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise FormatError(f"data must hold rows*cols = {rows * cols} entries")
    out = np.empty(rows * cols, dtype=np.complex128)
    for i, pair in enumerate(data):
        if (not isinstance(pair, (list, tuple)) or len(pair) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)):
            raise FormatError(f"entry {i} is not a [re, im] pair of numbers")
        out[i] = complex(pair[0], pair[1])
    M = out.reshape(rows, cols)
    if not np.all(np.isfinite(M)):
        raise FormatError("matrix entries must be finite")
    return M


def read_matrix(path) -> np.ndarray:
    """Read a matrix file; FormatError on bad JSON or schema, OSError on I/O."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
    return matrix_from_payload(obj)


def write_matrix(path, M) -> None:
    """Write a matrix file in the canonical format."""
    payload = matrix_to_payload(M)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=None, separators=(",", ":"))
        fh.write("\n")
