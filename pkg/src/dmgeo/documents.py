"""JSON document layer for the CLI.

Matrix documents carry a ``kind`` tag, the dimension ``n``, and the data
as nested ``[re, im]`` pairs; report documents carry per-command results
plus the tolerances used.  Floats are written in Python's shortest
round-trip decimal form, so parsing an emitted document reproduces every
value bit for bit.
"""

from __future__ import annotations

import hashlib
import json
import math

import numpy as np

from .core import DensityMatrix, PureState, Unitary, check_density
from .errors import DocumentError, NotNormalizedError, NotUnitaryError

KINDS = ("density", "pure_state", "unitary")

# tolerances at which parsed documents are accepted; emitted documents
# satisfy these by construction, hand-written ones must as well
HERMITIAN_TRACE_TOL = 1e-12
PSD_TOL = 1e-10
NORM_TOL = 1e-12
UNITARY_TOL = 1e-10


def _entry(value) -> complex:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(
            isinstance(part, (int, float)) and not isinstance(part, bool)
            for part in value
        )
    ):
        raise DocumentError(f"entry {value!r} is not a [re, im] pair")
    re, im = float(value[0]), float(value[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise DocumentError(f"entry {value!r} is not finite")
    return complex(re, im)


def _pair(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def _parse_square(data, n: int) -> np.ndarray:
    if not isinstance(data, list) or len(data) != n:
        raise DocumentError(f"expected {n} rows")
    out = np.empty((n, n), dtype=complex)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"row {i} does not have {n} entries")
        for j, value in enumerate(row):
            out[i, j] = _entry(value)
    return out


def matrix_document(value) -> dict:
    """Serialize a DensityMatrix, PureState, or Unitary to a document dict."""
    if isinstance(value, DensityMatrix):
        kind, n = "density", value.n
        data = [[_pair(z) for z in row] for row in value.matrix]
    elif isinstance(value, Unitary):
        kind, n = "unitary", value.n
        data = [[_pair(z) for z in row] for row in value.matrix]
    elif isinstance(value, PureState):
        kind, n = "pure_state", value.n
        data = [_pair(z) for z in value.amplitudes]
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    return {"kind": kind, "n": n, "data": data}


def from_document(obj) -> "DensityMatrix | PureState | Unitary":
    """Build the typed value a document describes.

    Structural problems raise :class:`DocumentError`; a well-formed
    document whose numbers violate the type invariants raises the
    matching validation error instead.  Values are wrapped without
    transformation so round-trips are exact.
    """
    if not isinstance(obj, dict):
        raise DocumentError("document is not a JSON object")
    missing = {"kind", "n", "data"} - set(obj)
    if missing:
        raise DocumentError(f"missing fields: {sorted(missing)}")
    kind = obj["kind"]
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}")
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DocumentError(f"n must be a positive integer, got {n!r}")

    if kind == "pure_state":
        data = obj["data"]
        if not isinstance(data, list) or len(data) != n * n:
            raise DocumentError(
                f"pure_state data must hold n^2 = {n * n} amplitudes"
            )
        amps = np.array([_entry(v) for v in data], dtype=complex)
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOL:
            raise NotNormalizedError(f"norm = {norm!r}")
        return PureState(amps)

    m = _parse_square(obj["data"], n)
    if kind == "density":
        check_density(m, HERMITIAN_TRACE_TOL, psd_tol=PSD_TOL)
        return DensityMatrix(m)
    dev = float(np.max(np.abs(m.conj().T @ m - np.eye(n))))
    if dev > UNITARY_TOL:
        raise NotUnitaryError(f"max |U^dag U - I| = {dev:.3e}")
    return Unitary(m)


def parse_matrix_document(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return from_document(obj)


def report_document(
    command: str, inputs: dict, results: dict, tolerances: dict, status: str = "ok"
) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "tolerances": tolerances,
        "status": status,
    }


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def dumps(doc: dict) -> str:
    """Render a document as one line of UTF-8 JSON, newline-terminated."""
    return json.dumps(doc) + "\n"
