"""Sparse JSON state files.

A state file is a JSON object::

    {"dims": [3, 3],
     "amplitudes": [{"index": [0, 0], "re": 0.5773502691896258, "im": 0.0},
                    {"index": [1, 1], "re": 0.5773502691896258, "im": 0.0},
                    {"index": [2, 2], "re": 0.5773502691896258, "im": 0.0}]}

Unlisted indices are zero. Floats are written with ``repr`` precision so a
read/write cycle is lossless.
"""

import json

import numpy as np

from .states import PureState, StateError

__all__ = ["StateFileError", "parse_state", "load_state", "state_to_dict", "dump_state"]


class StateFileError(StateError):
    """Malformed state document; the message names the offending key."""


def _number(value, key):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise StateFileError(f"{key!r} must be a number, got {value!r}")
    return float(value)


def parse_state(doc, renormalize=False):
    """Build a :class:`PureState` from a decoded state document."""
    if not isinstance(doc, dict):
        raise StateFileError("state document must be a JSON object")
    for key in ("dims", "amplitudes"):
        if key not in doc:
            raise StateFileError(f"missing key {key!r}")
    dims = doc["dims"]
    if not isinstance(dims, list) or not dims or not all(
        isinstance(d, int) and not isinstance(d, bool) for d in dims
    ):
        raise StateFileError(f"'dims' must be a nonempty list of integers, got {dims!r}")
    if any(d < 2 for d in dims):
        raise StateFileError(f"'dims' entries must be >= 2, got {dims!r}")
    records = doc["amplitudes"]
    if not isinstance(records, list):
        raise StateFileError("'amplitudes' must be a list of records")
    amps = np.zeros(tuple(dims), dtype=complex)
    seen = set()
    for n, rec in enumerate(records):
        where = f"amplitudes[{n}]"
        if not isinstance(rec, dict):
            raise StateFileError(f"{where!r} must be an object")
        for key in ("index", "re"):
            if key not in rec:
                raise StateFileError(f"missing key {where + '.' + key!r}")
        idx = rec["index"]
        if (
            not isinstance(idx, list)
            or len(idx) != len(dims)
            or not all(isinstance(i, int) and not isinstance(i, bool) for i in idx)
        ):
            raise StateFileError(f"{where + '.index'!r} must list {len(dims)} integers, got {idx!r}")
        if any(not 0 <= i < d for i, d in zip(idx, dims)):
            raise StateFileError(f"{where + '.index'!r} {idx} out of bounds for dims {dims}")
        if tuple(idx) in seen:
            raise StateFileError(f"{where + '.index'!r} duplicates {idx}")
        seen.add(tuple(idx))
        re = _number(rec["re"], where + ".re")
        im = _number(rec.get("im", 0.0), where + ".im")
        amps[tuple(idx)] = complex(re, im)
    try:
        return PureState.from_amplitudes(tuple(dims), amps, renormalize=renormalize)
    except StateError as exc:
        raise StateFileError(f"'amplitudes': {exc}") from exc


def load_state(path, renormalize=False):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StateFileError(f"{path}: not valid JSON ({exc})") from exc
    return parse_state(doc, renormalize=renormalize)


def state_to_dict(state):
    amps = state.amplitudes
    return {
        "dims": list(state.dims),
        "amplitudes": [
            {"index": list(idx), "re": float(amps[idx].real), "im": float(amps[idx].imag)}
            for idx in np.ndindex(*amps.shape)
            if amps[idx] != 0
        ],
    }


def dump_state(state, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(state_to_dict(state), fh, indent=1)
        fh.write("\n")
