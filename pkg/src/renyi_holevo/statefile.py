"""JSON files for states, ensembles and POVMs.

A matrix is ``{"dim": d, "re": [...], "im": [...]}`` where ``re``/``im`` are
``d x d`` row-major reals, given either nested or flat; ``im`` may be omitted.
An ensemble file adds ``"prior"`` and ``"states"`` (a list of matrix objects),
a POVM file adds ``"elements"``. Nested matrix objects inherit ``dim`` from
the top level.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .channel import Ensemble, Povm
from .exceptions import ValidationError
from .matcore import as_density_matrix


def _matrix(obj, dim=None, where="matrix") -> np.ndarray:
    if not isinstance(obj, dict) or "re" not in obj:
        raise ValidationError(f"{where}: expected an object with 're' (and optionally 'im')")
    d = obj.get("dim", dim)
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
    if d is None:
        d = re.shape[0] if re.ndim == 2 else int(round(np.sqrt(re.size)))
    d = int(d)
    if re.size != d * d or im.size != d * d:
        raise ValidationError(f"{where}: 're'/'im' must hold {d}x{d} = {d * d} entries")
    return (re.reshape(d, d) + 1j * im.reshape(d, d)).astype(complex)


def _read(path) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise ValidationError(f"{path}: top level must be an object")
    return doc


def _wrap(path, fn):
    try:
        return fn()
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


def parse_state(doc: dict) -> np.ndarray:
    return as_density_matrix(_matrix(doc))


def parse_ensemble(doc: dict) -> Ensemble:
    if "prior" not in doc or "states" not in doc:
        raise ValidationError("ensemble needs 'prior' and 'states'")
    dim = doc.get("dim")
    states = [_matrix(s, dim, f"states[{i}]") for i, s in enumerate(doc["states"])]
    return Ensemble(doc["prior"], states, tuple(doc.get("labels", ())))


def parse_povm(doc: dict) -> Povm:
    if "elements" not in doc:
        raise ValidationError("POVM needs 'elements'")
    dim = doc.get("dim")
    return Povm([_matrix(m, dim, f"elements[{i}]") for i, m in enumerate(doc["elements"])])


def load_state(path) -> np.ndarray:
    return _wrap(path, lambda: parse_state(_read(path)))


def load_ensemble(path) -> Ensemble:
    return _wrap(path, lambda: parse_ensemble(_read(path)))


def load_povm(path) -> Povm:
    return _wrap(path, lambda: parse_povm(_read(path)))


def matrix_doc(m) -> dict:
    m = np.asarray(m, dtype=complex)
    return {"dim": m.shape[0], "re": m.real.tolist(), "im": m.imag.tolist()}


def ensemble_doc(e: Ensemble) -> dict:
    return {"dim": e.dim, "prior": e.prior.tolist(), "states": [matrix_doc(s) for s in e.states]}


def povm_doc(m: Povm) -> dict:
    return {"dim": m.dim, "elements": [matrix_doc(x) for x in m.elements]}
