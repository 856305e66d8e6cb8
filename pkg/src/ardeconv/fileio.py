"""JSON and CSV interchange with full double precision (``%.17g``)."""
from __future__ import annotations

import json
import math

import numpy as np

from .banded import SymBanded, to_dense


def fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    return "%.17g" % x


def dumps(obj) -> str:
    """JSON text with every float written as ``%.17g``."""
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def matrix_to_csv(m) -> str:
    m = to_dense(m) if isinstance(m, SymBanded) else np.atleast_2d(np.asarray(m, dtype=float))
    return "".join(",".join(fmt_float(x) for x in row) + "\n" for row in m)


def series_to_csv(z) -> str:
    return "".join(fmt_float(float(x)) + "\n" for x in np.asarray(z, dtype=float).reshape(-1))


def parse_csv_matrix(text: str) -> np.ndarray:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty matrix file")
    data = [[float(v) for v in row.split(",")] for row in rows]
    if len({len(r) for r in data}) != 1:
        raise ValueError("rows of unequal length")
    return np.array(data)


def parse_series(text: str) -> np.ndarray:
    vals = [float(v) for line in text.splitlines() for v in line.split(",") if v.strip()]
    return np.array(vals)


def load_matrix(path: str) -> np.ndarray:
    """Dense matrix from a SymBanded ``.json`` file or a CSV file."""
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json"):
        return to_dense(SymBanded.from_dict(json.loads(text)))
    return parse_csv_matrix(text)


def load_series(path: str) -> np.ndarray:
    with open(path) as fh:
        return parse_series(fh.read())
