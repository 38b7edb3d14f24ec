"""Curve, report and sweep persistence with canonical formatting.

Floats are serialized with the shortest representation that parses back
to the identical value, so write - read - write is byte-identical.
"""

from __future__ import annotations

import csv
import json

import numpy as np

from .sampling import HEISENBERG, LIFT, SampledCurve

CURVE_TAG = "cr3-curve/1"

SWEEP_HEADER = [
    "kind", "r", "rho", "kappa", "tau", "p", "q", "spin", "maslov",
    "omega", "strain", "beta_raw", "beta", "sl_raw", "sl",
]


def _complex_pair(value):
    value = complex(value)
    return {"re": value.real, "im": value.imag}


def _jsonify(value):
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if isinstance(value, np.ndarray):
        if np.iscomplexobj(value):
            return [_complex_pair(v) for v in value.ravel()]
        return [_jsonify(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return _complex_pair(value)
    return value


def _restore(value):
    if isinstance(value, dict):
        if set(value) == {"re", "im"}:
            return complex(value["re"], value["im"])
        return {k: _restore(v) for k, v in value.items()}
    if isinstance(value, list):
        restored = [_restore(v) for v in value]
        if restored and all(isinstance(v, complex) for v in restored):
            return np.array(restored)
        return restored
    return value


def curve_to_dict(curve):
    """JSON-ready dictionary for a sampled curve."""
    samples = []
    if curve.model == LIFT:
        for s, row in zip(curve.s, curve.values):
            samples.append({
                "s": float(s),
                "z1": [row[0].real, row[0].imag],
                "z2": [row[1].real, row[1].imag],
                "z3": [row[2].real, row[2].imag],
            })
    else:
        for s, row in zip(curve.s, curve.values):
            samples.append({
                "s": float(s), "x": float(row[0]), "y": float(row[1]), "z": float(row[2]),
            })
    return {
        "format": CURVE_TAG,
        "model": curve.model,
        "periodic": bool(curve.periodic),
        "period": float(curve.period) if curve.period is not None else None,
        "samples": samples,
        "meta": _jsonify(curve.meta),
    }


def curve_from_dict(data):
    """Sampled curve from its file dictionary."""
    if data.get("format") != CURVE_TAG:
        raise ValueError("unsupported curve file format: %r" % data.get("format"))
    model = data["model"]
    s = np.array([float(rec["s"]) for rec in data["samples"]])
    if model == LIFT:
        values = np.array([
            [complex(rec[k][0], rec[k][1]) for k in ("z1", "z2", "z3")]
            for rec in data["samples"]
        ])
    elif model == HEISENBERG:
        values = np.array([
            [rec["x"], rec["y"], rec["z"]] for rec in data["samples"]
        ], dtype=float)
    else:
        raise ValueError("unknown curve model %r" % model)
    period = data.get("period")
    return SampledCurve(
        s=s,
        values=values,
        model=model,
        periodic=bool(data.get("periodic", False)),
        period=float(period) if period is not None else None,
        meta=_restore(data.get("meta", {})),
    )


def write_curve(curve, path):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(curve_to_dict(curve), handle, indent=1)
        handle.write("\n")


def read_curve(path):
    with open(path, "r", encoding="utf-8") as handle:
        return curve_from_dict(json.load(handle))


def write_report(report, path):
    """Write a report dictionary as stable, human-readable JSON."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(_jsonify(report), handle, indent=1)
        handle.write("\n")


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_sweep(rows, path):
    """CSV sweep output with the fixed column layout."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SWEEP_HEADER)
        for row in rows:
            writer.writerow([_csv_cell(row.get(col)) for col in SWEEP_HEADER])
