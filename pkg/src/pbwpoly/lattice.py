"""Backend selection for lattice-point enumeration.

The compiled kernel is used when it imports; set ``PBWPOLY_BACKEND=python``
to force the pure-Python implementation (the benchmark does this).
"""
from __future__ import annotations

import os
from collections.abc import Sequence

from . import _lattice_py

try:
    if os.environ.get("PBWPOLY_BACKEND", "").lower() == "python":
        raise ImportError("pure-python backend requested")
    from . import _lattice as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def _as_arrays(A, b, ub):
    import numpy as np

    ncols = len(ub)
    A_arr = np.zeros((len(A), ncols), dtype=np.int64)
    for r, row in enumerate(A):
        A_arr[r, :] = row
    return A_arr, np.asarray(b, dtype=np.int64).reshape(len(A)), np.asarray(ub, dtype=np.int64).reshape(ncols)


def enumerate_points(A: Sequence[Sequence[int]], b: Sequence[int], ub: Sequence[int], backend: str | None = None) -> list[tuple[int, ...]]:
    """All integer ``x`` with ``0 <= x <= ub`` and ``A x <= b``, lexicographically sorted."""
    backend = backend or BACKEND
    if backend == "cython" and _compiled is not None:
        return [tuple(row) for row in _compiled.enumerate_points(*_as_arrays(A, b, ub)).tolist()]
    return _lattice_py.enumerate_points([list(r) for r in A], list(b), list(ub))


def count_points(A: Sequence[Sequence[int]], b: Sequence[int], ub: Sequence[int], backend: str | None = None) -> int:
    backend = backend or BACKEND
    if backend == "cython" and _compiled is not None:
        return int(_compiled.count_points(*_as_arrays(A, b, ub)))
    return _lattice_py.count_points([list(r) for r in A], list(b), list(ub))
