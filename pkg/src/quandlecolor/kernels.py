"""Hot loop of coloring enumeration: which assignments satisfy every relation.

Two interchangeable implementations share one signature:

* ``relation_mask_numba`` loops assignment by assignment and stops at the
  first violated relation.
* ``relation_mask_numpy`` pushes the whole assignment block through each word
  at once with fancy indexing.

``relation_mask`` is bound to numba unless ``QUANDLECOLOR_DISABLE_NUMBA`` is
set to a non-empty value other than ``0``, or numba cannot be imported.

All arrays are 0-indexed ``int64``.  Relations are packed as concatenated
letter arrays in application order (rightmost letter first) with
``offsets[r]:offsets[r+1]`` delimiting relation ``r``.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

ENV_FLAG = "QUANDLECOLOR_DISABLE_NUMBA"


def relation_mask_numpy(assign, offsets, gens, signs, left, right, op, inv):
    out = np.ones(assign.shape[0], dtype=np.bool_)
    for r in range(left.shape[0]):
        alive = np.flatnonzero(out)
        if alive.size == 0:
            break
        v = assign[alive].copy()
        for p in range(offsets[r], offsets[r + 1]):
            i = gens[p]
            a = v[:, i].copy()
            b = v[:, i + 1]
            if signs[p] > 0:
                v[:, i] = inv[b, a]
                v[:, i + 1] = a
            else:
                v[:, i] = b
                v[:, i + 1] = op[a, b]
        out[alive[v[:, left[r]] != v[:, right[r]]]] = False
    return out


def _relation_mask_py(assign, offsets, gens, signs, left, right, op, inv):
    m_total, n = assign.shape
    out = np.ones(m_total, dtype=np.bool_)
    v = np.empty(n, dtype=np.int64)
    for m in range(m_total):
        for r in range(left.shape[0]):
            for j in range(n):
                v[j] = assign[m, j]
            for p in range(offsets[r], offsets[r + 1]):
                i = gens[p]
                a = v[i]
                b = v[i + 1]
                if signs[p] > 0:
                    v[i] = inv[b, a]
                    v[i + 1] = a
                else:
                    v[i] = b
                    v[i + 1] = op[a, b]
            if v[left[r]] != v[right[r]]:
                out[m] = False
                break
    return out


try:
    import numba

    relation_mask_numba = numba.njit(cache=True, nogil=True)(_relation_mask_py)
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    relation_mask_numba = None
    HAVE_NUMBA = False


def _numba_disabled() -> bool:
    return os.environ.get(ENV_FLAG, "") not in ("", "0")


if HAVE_NUMBA and not _numba_disabled():
    BACKEND = "numba"
    relation_mask = relation_mask_numba
else:
    if not HAVE_NUMBA and not _numba_disabled():  # pragma: no cover
        warnings.warn("numba is not available; using the numpy kernels", RuntimeWarning,
                      stacklevel=2)
    BACKEND = "numpy"
    relation_mask = relation_mask_numpy


def get_kernel(backend: str | None = None):
    """Return the mask kernel for ``backend`` (``"numba"``, ``"numpy"`` or the active one)."""
    if backend is None:
        return relation_mask
    if backend == "numpy":
        return relation_mask_numpy
    if backend == "numba":
        if relation_mask_numba is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        return relation_mask_numba
    raise ValueError(f"unknown backend {backend!r}")
