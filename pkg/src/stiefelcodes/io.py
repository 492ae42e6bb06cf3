"""Code file serialization.

Codes travel as JSON: field tag, dimensions, and an n x d x r array of
[re, im] pairs (pairs even for real codes, whose im entries must be exactly
zero).  Floats are written with 17 significant digits so a written file
parses back to bit-identical doubles, and the writer is fully deterministic:
rerunning a command reproduces the file byte for byte.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .core import Field, StiefelCode
from .errors import InvalidParameter, SchemaError

SCHEMA_VERSION = 1


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise InvalidParameter(f"cannot serialize non-finite value {x}")
    return format(float(x), ".17g")


def _render(obj) -> str:
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_render(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    raise InvalidParameter(f"cannot serialize {type(obj).__name__}")


def render_json(obj) -> str:
    """Deterministic JSON with floats at 17 significant digits."""
    return _render(obj)


def code_to_dict(code: StiefelCode, metadata: dict | None = None) -> dict:
    mats = [
        [[[float(z.real), float(z.imag)] for z in row] for row in point]
        for point in code.array
    ]
    meta = dict(sorted((metadata or {}).items()))
    return {
        "schema_version": SCHEMA_VERSION,
        "field": code.field.value,
        "d": code.d,
        "r": code.r,
        "n": code.n,
        "metadata": meta,
        "matrices": mats,
    }


def dumps_code(code: StiefelCode, metadata: dict | None = None) -> str:
    return _render(code_to_dict(code, metadata)) + "\n"


def write_code_file(path, code: StiefelCode, metadata: dict | None = None) -> None:
    Path(path).write_text(dumps_code(code, metadata), encoding="utf-8")


def code_from_dict(data) -> tuple[StiefelCode, dict]:
    if not isinstance(data, dict):
        raise SchemaError("code file must hold a JSON object")
    for key in ("schema_version", "field", "d", "r", "n", "matrices"):
        if key not in data:
            raise SchemaError(f"missing key {key!r}")
    if data["schema_version"] != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {data['schema_version']!r}")
    if data["field"] not in ("R", "C"):
        raise SchemaError(f"field must be 'R' or 'C', got {data['field']!r}")
    field = Field(data["field"])
    try:
        d, r, n = int(data["d"]), int(data["r"]), int(data["n"])
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"dimensions must be integers: {exc}") from exc
    mats = data["matrices"]
    arr = np.zeros((n, d, r), dtype=np.complex128)
    try:
        if len(mats) != n:
            raise SchemaError(f"expected {n} matrices, got {len(mats)}")
        for i, point in enumerate(mats):
            if len(point) != d:
                raise SchemaError(f"matrix {i} has {len(point)} rows, expected {d}")
            for a, row in enumerate(point):
                if len(row) != r:
                    raise SchemaError(f"matrix {i} row {a} has {len(row)} entries, expected {r}")
                for b, entry in enumerate(row):
                    re, im = entry
                    if not (isinstance(re, (int, float)) and isinstance(im, (int, float))):
                        raise SchemaError("entries must be [re, im] number pairs")
                    arr[i, a, b] = complex(re, im)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"malformed matrices array: {exc}") from exc
    if field is Field.REAL and np.any(arr.imag != 0.0):
        raise SchemaError("field 'R' requires every imaginary part to be zero")
    metadata = data.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise SchemaError("metadata must be an object")
    try:
        code = StiefelCode(field, arr)
    except InvalidParameter as exc:
        raise SchemaError(str(exc)) from exc
    return code, metadata


def loads_code(text: str) -> tuple[StiefelCode, dict]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    return code_from_dict(data)


def read_code_file(path) -> tuple[StiefelCode, dict]:
    return loads_code(Path(path).read_text(encoding="utf-8"))
