"""Kernel backend selection.

Prefers the compiled extension; falls back to the pure-Python twin when
the extension was not built.  ``FILTRUM_FORCE_PURE=1`` forces the fallback,
which the benchmark and the determinism tests use to compare backends.
Carriers with 64 or more elements always take the pure path: the compiled
kernels keep subset masks in a single machine word.
"""

from __future__ import annotations

import os

from . import pure as _pure

if os.environ.get("FILTRUM_FORCE_PURE"):
    _impl = _pure
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pure

BACKEND: str = _impl.BACKEND

_WORD_LIMIT = 64


def _backend(size: int):
    return _impl if size < _WORD_LIMIT else _pure


def divisor_masks(size, mul):
    return _backend(size).divisor_masks(size, mul)


def close_filter(size, mul, one, div_masks, seed):
    return _backend(size).close_filter(size, mul, one, div_masks, seed)


def is_filter_mask(size, mul, one, div_masks, mask):
    return _backend(size).is_filter_mask(size, mul, one, div_masks, mask)


def enumerate_filters_scan(size, mul, one, div_masks, start=0, stop=None):
    return _backend(size).enumerate_filters_scan(size, mul, one, div_masks, start, stop)


def enumerate_filters_closure(size, mul, one, div_masks):
    return _backend(size).enumerate_filters_closure(size, mul, one, div_masks)


__all__ = [
    "BACKEND",
    "divisor_masks",
    "close_filter",
    "is_filter_mask",
    "enumerate_filters_scan",
    "enumerate_filters_closure",
]
