"""Loop-heavy kernels with a numba fast path and a numpy/python fallback.

The backend is chosen once at import time from the TADROP_BACKEND
environment variable: "numba" (default, used when numba imports cleanly)
or "numpy" to force the fallback. Both paths produce bit-identical
results; `benchmarks/bench_kernels.py` compares their throughput.
"""

from __future__ import annotations

import os

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_INV_2_53 = 2.0 ** -53


def _backend_requested() -> str:
    value = os.environ.get("TADROP_BACKEND", "numba").strip().lower()
    if value in ("numpy", "python", "off", "0"):
        return "numpy"
    return "numba"


_HAVE_NUMBA = False
if _backend_requested() == "numba":
    try:
        import numba

        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - environment without numba
        _HAVE_NUMBA = False


def active_backend() -> str:
    """Name of the kernel backend in use: "numba" or "numpy"."""
    return "numba" if _HAVE_NUMBA else "numpy"


def _counter_uniforms_py(seed: int, count: int) -> np.ndarray:
    # SplitMix64 evaluated at counters seed + (m+1)*GOLDEN, vectorized in
    # uint64 arithmetic (numpy wraps unsigned overflow, matching the jit path).
    idx = np.arange(1, count + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK64) + idx * np.uint64(_GOLDEN)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * _INV_2_53


def _components_impl(n, ei, ej):
    # Disjoint-set forest: union by rank with two-pass path compression.
    parent = np.arange(n, dtype=np.int64)
    rank = np.zeros(n, dtype=np.int64)
    for m in range(ei.shape[0]):
        a = ei[m]
        while parent[a] != a:
            a = parent[a]
        r = ei[m]
        while parent[r] != a:
            nxt = parent[r]
            parent[r] = a
            r = nxt
        b = ej[m]
        while parent[b] != b:
            b = parent[b]
        r = ej[m]
        while parent[r] != b:
            nxt = parent[r]
            parent[r] = b
            r = nxt
        if a == b:
            continue
        if rank[a] < rank[b]:
            a, b = b, a
        parent[b] = a
        if rank[a] == rank[b]:
            rank[a] += 1
    # Relabel roots in order of first appearance; scanning node ids ascending
    # makes labels ordered by smallest member.
    labels = np.empty(n, dtype=np.int64)
    root_label = np.full(n, -1, dtype=np.int64)
    count = 0
    for i in range(n):
        r = i
        while parent[r] != r:
            r = parent[r]
        if root_label[r] < 0:
            root_label[r] = count
            count += 1
        labels[i] = root_label[r]
    return labels, count


if _HAVE_NUMBA:

    @numba.njit(cache=True)
    def _counter_uniforms_nb(seed, count):  # pragma: no cover - jitted
        out = np.empty(count, dtype=np.float64)
        golden = np.uint64(_GOLDEN)
        mix1 = np.uint64(_MIX1)
        mix2 = np.uint64(_MIX2)
        for m in range(count):
            z = seed + np.uint64(m + 1) * golden
            z = (z ^ (z >> np.uint64(30))) * mix1
            z = (z ^ (z >> np.uint64(27))) * mix2
            z = z ^ (z >> np.uint64(31))
            out[m] = np.float64(z >> np.uint64(11)) * _INV_2_53
        return out

    _components_nb = numba.njit(cache=True)(_components_impl)


def counter_uniforms(seed: int, count: int) -> np.ndarray:
    """Uniform [0,1) draws from independent per-index streams.

    Draw m depends only on (seed, m), so outcomes are stable under any
    evaluation or parallelization order.
    """
    seed = int(seed) & _MASK64
    if count == 0:
        return np.empty(0, dtype=np.float64)
    if _HAVE_NUMBA:
        return _counter_uniforms_nb(np.uint64(seed), count)
    return _counter_uniforms_py(seed, count)


def derive_seed(seed: int, index: int) -> int:
    """Deterministic child seed for stream `index` under a master seed."""
    z = (int(seed) + (int(index) + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def connected_component_labels(n: int, ei: np.ndarray, ej: np.ndarray):
    """Per-node component labels (contiguous, ordered by smallest member).

    Returns (labels, count).
    """
    ei = np.ascontiguousarray(ei, dtype=np.int64)
    ej = np.ascontiguousarray(ej, dtype=np.int64)
    if _HAVE_NUMBA:
        return _components_nb(n, ei, ej)
    return _components_impl(n, ei, ej)
