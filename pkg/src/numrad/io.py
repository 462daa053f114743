"""Matrix and report files.

Matrices are JSON objects ``{"dim": n, "entries": [[re, im], ...]}`` with
the ``n*n`` entries in row-major order.  Reports are JSON with every float
written to 17 significant digits, or CSV.
"""
from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

from .errors import InvalidMatrix
from .linalg import as_matrix


def matrix_from_json(obj) -> np.ndarray:
    try:
        n = obj["dim"]
        entries = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise InvalidMatrix(f"matrix object needs 'dim' and 'entries': {exc}") from None
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidMatrix(f"dim must be a positive integer, got {n!r}")
    if not isinstance(entries, list) or len(entries) != n * n:
        raise InvalidMatrix(f"expected {n * n} entries")
    values = []
    for e in entries:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in e)
        ):
            raise InvalidMatrix(f"entry {e!r} is not a [re, im] pair")
        values.append(complex(e[0], e[1]))
    return as_matrix(np.array(values).reshape(n, n))


def matrix_to_json(a) -> dict:
    a = as_matrix(a)
    return {"dim": a.shape[0], "entries": [[z.real, z.imag] for z in a.ravel()]}


def load_matrix(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidMatrix(f"{path}: not valid JSON ({exc})") from None
    return matrix_from_json(obj)


def save_matrix(a, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(matrix_to_json(a)))
        fh.write("\n")


def _float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def _encode(obj, indent: int, level: int) -> str:
    pad = "\n" + " " * (indent * (level + 1))
    end = "\n" + " " * (indent * level)
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return _encode([obj.real, obj.imag], indent, level)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        if obj.ndim == 2 and obj.shape[0] == obj.shape[1]:
            return _encode(matrix_to_json(obj), indent, level)
        return _encode(obj.tolist(), indent, level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{" + pad + ("," + pad).join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level) for v in obj) + "]"
        items = [_encode(v, indent, level + 1) for v in obj]
        return "[" + pad + ("," + pad).join(items) + end + "]"
    if hasattr(obj, "to_dict"):
        return _encode(obj.to_dict(), indent, level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    """JSON text with floats at 17 significant digits and non-finite floats as null.

    Complex numbers become ``[re, im]``; square arrays become matrix objects.
    """
    return _encode(obj, indent, 0)


def bounds_to_csv(bounds) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "lhs", "rhs", "margin", "holds", "params"])
    for b in bounds:
        holds = "" if b.holds is None else str(b.holds).lower()
        w.writerow([b.name, _float(b.lhs), _float(b.rhs), _float(b.margin), holds, dumps(b.params, indent=0).replace("\n", "")])
    return buf.getvalue()


def rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    keys = list(rows[0])
    w.writerow(keys)
    for r in rows:
        w.writerow([_float(v) if isinstance(v, float) else v for v in (r[k] for k in keys)])
    return buf.getvalue()
