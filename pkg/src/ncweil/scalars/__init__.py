"""Exact scalar ring: Gaussian rationals and truncated theta-series.

The hot kernels (coefficient arithmetic) exist twice: a Cython
extension (``_speedups``) and a pure-Python fallback (``_pure``) with
identical semantics.  The extension is used when importable; set
``NCWEIL_PURE=1`` to force the fallback (the benchmark and the twin
test do this).
"""

import os

if os.environ.get("NCWEIL_PURE"):
    from . import _pure as _backend
else:
    try:
        from . import _speedups as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _backend

GaussRational = _backend.GaussRational
TruncSeries = _backend.TruncSeries
BACKEND = _backend.BACKEND

GR_ZERO = _backend.GR_ZERO
GR_ONE = _backend.GR_ONE
GR_I = _backend.GR_I


def series_one(order):
    return TruncSeries.one(order)


def series_zero(order):
    return TruncSeries.zero(order)


def series_theta(order, power=1):
    return TruncSeries.theta(order, power)


def series_const(value, order):
    return TruncSeries.constant(value, order)


__all__ = [
    "GaussRational",
    "TruncSeries",
    "BACKEND",
    "GR_ZERO",
    "GR_ONE",
    "GR_I",
    "series_one",
    "series_zero",
    "series_theta",
    "series_const",
]
