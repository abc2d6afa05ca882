"""File formats: JSON detector states and bases, CSV/JSON tables.

Complex numbers are written as ``[re, im]`` pairs. Floats in CSV use 17
significant digits; rows end in LF.
"""
import io
import json
import math

import numpy as np

from wwk.errors import InputError
from wwk.interferometer import DetectorPair
from wwk.readout import ReadoutBasis

LOAD_NORM_TOL = 1e-6


def _encode_vec(v):
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=np.complex128)]


def _decode_vec(raw, name):
    try:
        arr = np.array([complex(float(x[0]), float(x[1])) for x in raw], dtype=np.complex128)
    except (TypeError, ValueError, IndexError, KeyError) as exc:
        raise InputError(f"{name}: expected a list of [re, im] pairs") from exc
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name}: amplitudes must be finite")
    return arr


def _renormalized(v, name):
    n = float(np.linalg.norm(v))
    if abs(n - 1.0) > LOAD_NORM_TOL:
        raise InputError(f"{name} has norm {n!r}; expected 1 within {LOAD_NORM_TOL:g}")
    return v / n


def pair_to_dict(pair):
    return {"dim": pair.dim, "chi_a": _encode_vec(pair.chi_a), "chi_b": _encode_vec(pair.chi_b)}


def pair_from_dict(obj):
    if not isinstance(obj, dict):
        raise InputError("state file must hold a JSON object")
    try:
        dim = int(obj["dim"])
        raw_a, raw_b = obj["chi_a"], obj["chi_b"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError('state object needs "dim", "chi_a" and "chi_b"') from exc
    a = _decode_vec(raw_a, "chi_a")
    b = _decode_vec(raw_b, "chi_b")
    if a.size != dim or b.size != dim:
        raise InputError(f"dim is {dim} but chi_a/chi_b have {a.size}/{b.size} entries")
    return DetectorPair(_renormalized(a, "chi_a"), _renormalized(b, "chi_b"))


def basis_to_dict(basis):
    return {"dim": basis.dim, "labels": list(basis.labels), "vectors": [_encode_vec(v) for v in basis.vectors]}


def basis_from_dict(obj):
    if not isinstance(obj, dict):
        raise InputError("basis file must hold a JSON object")
    try:
        dim = int(obj["dim"])
        vecs = [_decode_vec(v, f"vectors[{k}]") for k, v in enumerate(obj["vectors"])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError('basis object needs "dim" and "vectors"') from exc
    labels = obj.get("labels") or [str(k) for k in range(len(vecs))]
    if any(v.size != dim for v in vecs):
        raise InputError("every basis vector must have dim entries")
    return ReadoutBasis(np.array(vecs).reshape(len(vecs), dim), tuple(labels))


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def load_pair(path):
    return pair_from_dict(_load_json(path))


def load_basis(path):
    return basis_from_dict(_load_json(path))


def dump_json(obj):
    """Deterministic JSON text (fixed key order as given, LF, trailing newline)."""
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def num(x):
    """17-significant-digit float text; NaN becomes ``nan``."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    return f"{x:.17g}"


def json_num(x):
    x = float(x)
    return None if math.isnan(x) else x


def csv_text(header, rows):
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(c if isinstance(c, str) else num(c) for c in row) + "\n")
    return buf.getvalue()


def sweep_csv(sweep):
    n = sweep.joint.shape[1]
    header = ["delta_over_pi", "P", "K"] + [f"p_{i}" for i in range(n)]
    rows = ([d / np.pi, P, K, *j] for d, P, K, j in zip(sweep.deltas, sweep.P, sweep.K, sweep.joint))
    return csv_text(header, rows)


def sweep_json(sweep):
    return dump_json(
        {
            "labels": list(sweep.labels),
            "delta_over_pi": [float(d / np.pi) for d in sweep.deltas],
            "P": [float(x) for x in sweep.P],
            "K": [json_num(x) for x in sweep.K],
            "joint": [[float(x) for x in row] for row in sweep.joint],
        }
    )


def mc_csv(sweep, mc):
    """Phase-sweep columns at the bin centers plus the Monte Carlo tallies."""
    n = sweep.joint.shape[1]
    header = ["delta_over_pi", "P", "K"] + [f"p_{i}" for i in range(n)] + ["n", "n_correct", "K_hat", "stderr"]
    rows = []
    for k in range(mc.n.size):
        rows.append(
            [mc.delta_center[k] / np.pi, sweep.P[k], sweep.K[k], *sweep.joint[k], str(int(mc.n[k])), str(int(mc.n_correct[k])), mc.K_hat[k], mc.stderr[k]]
        )
    return csv_text(header, rows)
