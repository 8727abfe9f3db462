"""Logarithm base shared by every entropy-like quantity.

Base 2 (bits) by default. Switch with :func:`set_log_base` or, scoped, with
:func:`log_base`. The setting lives in a context variable, so threads and
asyncio tasks see their own value.
"""

from __future__ import annotations

import contextlib
import contextvars
import math

import numpy as np

from .exceptions import ParameterError

_BASE = contextvars.ContextVar("log_base", default=2.0)


def _check(base) -> float:
    if isinstance(base, str):
        if base == "e":
            return math.e
        try:
            base = float(base)
        except ValueError:
            raise ParameterError(f"unknown log base {base!r}") from None
    base = float(base)
    if not (base > 0 and base != 1 and math.isfinite(base)):
        raise ParameterError(f"log base must be positive and != 1, got {base}")
    return base


def get_log_base() -> float:
    return _BASE.get()


def set_log_base(base) -> None:
    _BASE.set(_check(base))


@contextlib.contextmanager
def log_base(base):
    token = _BASE.set(_check(base))
    try:
        yield
    finally:
        _BASE.reset(token)


def base_label(base: float | None = None) -> str:
    b = get_log_base() if base is None else base
    return "e" if b == math.e else f"{b:g}"


def log(x, base: float | None = None):
    """Logarithm in the active base; ``log(0) = -inf`` without a warning."""
    b = get_log_base() if base is None else _check(base)
    with np.errstate(divide="ignore"):
        return np.log(x) / math.log(b)
