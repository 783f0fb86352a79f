"""
Reading distance files and writing result tables.

Distance files are plain UTF-8 text with one nonnegative decimal number
(dot separator) per line. Blank lines and lines whose first non-blank
character is ``#`` are ignored.
"""

import csv
import io as _io
import json
import math
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .estimators import PerpendicularSample

__all__ = [
    "DistanceFileError",
    "DatasetValidationError",
    "DistanceFile",
    "parse_distances",
    "read_distances",
    "load_stakes",
    "STAKES_N",
    "STAKES_MEAN",
    "STAKES_LINE_LENGTH",
    "STAKES_TRUE_DENSITY",
    "format_number",
    "to_csv",
    "to_json",
    "SCHEMAS",
]

STAKES_N = 68
STAKES_MEAN = 6.10824
STAKES_LINE_LENGTH = 1000.0
STAKES_TRUE_DENSITY = 0.00375

_NUMBER = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


class DistanceFileError(ValueError):
    def __init__(self, message, line=None, source=None):
        where = f"{source or '<input>'}" + (f", line {line}" if line is not None else "")
        super().__init__(f"{where}: {message}")
        self.line = line
        self.source = source


class DatasetValidationError(ValueError):
    pass


@dataclass(frozen=True)
class DistanceFile:
    path: str
    sample: PerpendicularSample
    units: str = "m"


def parse_distances(text, source=None):
    """Parse distance-file text into a :class:`PerpendicularSample`."""
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not _NUMBER.match(line):
            raise DistanceFileError(f"not a decimal number: {line!r}", lineno, source)
        v = float(line)
        if not math.isfinite(v):
            raise DistanceFileError(f"not finite: {line!r}", lineno, source)
        if v < 0:
            raise DistanceFileError(f"negative distance {line}", lineno, source)
        values.append(v)
    if not values:
        raise DistanceFileError("no distances found", None, source)
    return PerpendicularSample(values)


def read_distances(path):
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise DistanceFileError(f"cannot read file: {exc.strerror or exc}", None, str(p)) from exc
    return DistanceFile(str(p), parse_distances(text, source=str(p)))


def validate_stakes(sample):
    if sample.n != STAKES_N or abs(sample.mean - STAKES_MEAN) > 1e-5:
        raise DatasetValidationError(
            f"stakes dataset mismatch: expected n = {STAKES_N} and mean = {STAKES_MEAN}, "
            f"got n = {sample.n} and mean = {sample.mean:.6f}"
        )
    return sample


def load_stakes():
    """The bundled stakes distances, validated against n = 68 and mean 6.10824.

    See the header of ``data/stakes.txt`` for how the values were obtained.
    """
    text = resources.files("linetransect").joinpath("data/stakes.txt").read_text(encoding="utf-8")
    return validate_stakes(parse_distances(text, source="stakes.txt"))


def format_number(v):
    """Shortest round-trip text for floats; integers and strings unchanged; None -> ''."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(float(v))
    return str(v)


def to_csv(rows, columns):
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([format_number(r.get(c)) for c in columns])
    return buf.getvalue()


def _json_clean(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def to_json(kind, rows, meta=None):
    doc = {"kind": kind, "rows": [{k: _json_clean(v) for k, v in r.items()} for r in rows]}
    if meta:
        doc["meta"] = meta
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


_num = {"type": "number"}
_num_or_null = {"type": ["number", "null"]}
_int_or_null = {"type": ["integer", "null"]}


def _schema(kind, props, required):
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": ["kind", "rows"],
        "properties": {
            "kind": {"const": kind},
            "meta": {"type": "object"},
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": required,
                    "properties": props,
                    "additionalProperties": False,
                },
            },
        },
    }


COLUMNS = {
    "estimate": ["method", "m", "n", "f0_hat", "beta_hat", "converged", "iterations", "line_length", "density_hat"],
    "simulate": [
        "family", "delta", "n", "estimator", "rb", "rrmse", "eff", "eff_mse",
        "mean_estimate", "rb_se", "rrmse_se", "eff_se", "truth_f0", "reps", "seed",
    ],
    "bootstrap": ["estimator", "point", "boot_mean", "bias", "sd", "mse", "density_hat", "reps", "seed"],
    "curve": ["x", "g"],
    "constants1": ["m", "numerator", "denominator", "f0"],
    "constants2": ["m", "l_m"],
}

SCHEMAS = {
    "estimate": _schema(
        "estimate",
        {
            "method": {"enum": ["exponential", "halfnormal", "mom", "mle"]},
            "m": _int_or_null,
            "n": {"type": "integer", "minimum": 1},
            "f0_hat": _num,
            "beta_hat": _num_or_null,
            "converged": {"type": "boolean"},
            "iterations": {"type": "integer", "minimum": 0},
            "line_length": _num_or_null,
            "density_hat": _num_or_null,
        },
        ["method", "n", "f0_hat", "converged", "iterations"],
    ),
    "simulate": _schema(
        "simulate",
        {
            "family": {"enum": ["EP", "HR", "BE", "GP"]},
            "delta": _num,
            "n": {"type": "integer", "minimum": 2},
            "estimator": {"type": "string"},
            "rb": _num,
            "rrmse": _num,
            "eff": _num_or_null,
            "eff_mse": _num_or_null,
            "mean_estimate": _num,
            "rb_se": _num_or_null,
            "rrmse_se": _num_or_null,
            "eff_se": _num_or_null,
            "truth_f0": _num,
            "reps": {"type": "integer", "minimum": 1},
            "seed": {"type": "integer"},
        },
        ["family", "delta", "n", "estimator", "rb", "rrmse", "eff", "truth_f0", "reps", "seed"],
    ),
    "bootstrap": _schema(
        "bootstrap",
        {
            "estimator": {"type": "string"},
            "point": _num,
            "boot_mean": _num,
            "bias": _num,
            "sd": {"type": "number", "minimum": 0},
            "mse": {"type": "number", "minimum": 0},
            "density_hat": _num_or_null,
            "reps": {"type": "integer", "minimum": 2},
            "seed": {"type": "integer"},
        },
        ["estimator", "point", "boot_mean", "bias", "sd", "mse", "reps", "seed"],
    ),
    "curve": _schema("curve", {"x": _num, "g": _num}, ["x", "g"]),
    "constants1": _schema(
        "constants1",
        {"m": {"type": "integer"}, "numerator": {"type": "integer"}, "denominator": {"type": "integer"}, "f0": _num},
        ["m", "numerator", "denominator", "f0"],
    ),
    "constants2": _schema("constants2", {"m": {"type": "integer"}, "l_m": _num}, ["m", "l_m"]),
}
