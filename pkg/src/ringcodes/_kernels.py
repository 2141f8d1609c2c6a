"""Hot enumeration kernels for the minimum-distance engines.

Both kernels run a depth-first colexicographic scan over column subsets of a
parity-check matrix, keeping an incrementally eliminated basis of the current
prefix.  A column that reduces to zero against the prefix closes a dependent
subset.  The generic kernel works over any GF(q) through lookup tables; the
GF(2) kernel packs columns into single machine words.

JIT-compiled with numba when available; the pure-Python definitions are the
fallback and the reference for cross-checking.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap

FOUND = 1
NOT_FOUND = 0
BUDGET_EXCEEDED = -1


@njit(cache=True)
def dependent_subset_search(cols, w_max, mul, sub, inv, node_budget):
    """Search for <= w_max linearly dependent columns.

    cols: (n, r) int16 array, one matrix column per row.
    Returns (status, size, subset_buffer, nodes); on FOUND the first `size`
    entries of subset_buffer are the 0-based column indices of a dependent set.
    """
    n, r = cols.shape
    basis = np.zeros((w_max, r), dtype=np.int16)
    pivot = np.zeros(w_max, dtype=np.int64)
    choice = np.zeros(w_max, dtype=np.int64)
    v = np.zeros(r, dtype=np.int16)
    d = 0
    i = 0
    nodes = 0
    while True:
        if i >= n:
            d -= 1
            if d < 0:
                return NOT_FOUND, 0, choice, nodes
            i = choice[d] + 1
            continue
        nodes += 1
        if nodes > node_budget:
            return BUDGET_EXCEEDED, 0, choice, nodes
        for j in range(r):
            v[j] = cols[i, j]
        for t in range(d):
            f = v[pivot[t]]
            if f != 0:
                for j in range(r):
                    v[j] = sub[v[j], mul[f, basis[t, j]]]
        pv = -1
        for j in range(r):
            if v[j] != 0:
                pv = j
                break
        if pv < 0:
            choice[d] = i
            return FOUND, d + 1, choice, nodes
        if d + 1 < w_max:
            g = inv[v[pv]]
            for j in range(r):
                basis[d, j] = mul[g, v[j]]
            pivot[d] = pv
            choice[d] = i
            d += 1
        i += 1


@njit(cache=True)
def dependent_subset_search_gf2(colbits, w_max, node_budget):
    """GF(2) variant of dependent_subset_search with bit-packed columns.

    colbits: (n,) uint64 array; bit j of entry i is row j of matrix column i.
    """
    n = colbits.shape[0]
    basis = np.zeros(w_max, dtype=np.uint64)
    pivot = np.zeros(w_max, dtype=np.uint64)
    choice = np.zeros(w_max, dtype=np.int64)
    one = np.uint64(1)
    d = 0
    i = 0
    nodes = 0
    while True:
        if i >= n:
            d -= 1
            if d < 0:
                return NOT_FOUND, 0, choice, nodes
            i = choice[d] + 1
            continue
        nodes += 1
        if nodes > node_budget:
            return BUDGET_EXCEEDED, 0, choice, nodes
        v = colbits[i]
        for t in range(d):
            if (v >> pivot[t]) & one:
                v ^= basis[t]
        if v == np.uint64(0):
            choice[d] = i
            return FOUND, d + 1, choice, nodes
        if d + 1 < w_max:
            pv = np.uint64(0)
            while not (v >> pv) & one:
                pv += one
            basis[d] = v
            pivot[d] = pv
            choice[d] = i
            d += 1
        i += 1


def warm_up() -> None:
    """Trigger JIT compilation with tiny inputs (results discarded)."""
    cols = np.array([[1, 0], [0, 1], [1, 1]], dtype=np.int16)
    tbl = np.array([[0, 1], [1, 0]], dtype=np.int16)
    inv = np.array([0, 1], dtype=np.int16)
    dependent_subset_search(cols, 3, tbl, tbl, inv, 1 << 20)
    bits = np.array([1, 2, 3], dtype=np.uint64)
    dependent_subset_search_gf2(bits, 3, 1 << 20)
