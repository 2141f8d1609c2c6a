"""Exact minimum-distance computation.

Three engines with a dispatcher:

* exhaustive codeword enumeration (exact, bounded by q^k);
* column-dependence search on the parity-check matrix (exact lower bounds and
  witnesses: d equals the minimum number of dependent columns of H);
* randomized information-set search (fast upper-bound witnesses only).

Any returned witness is verified to be a codeword of the reported weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import _kernels
from .codes import LinearCode
from .linalg import MatrixGF

__all__ = [
    "Budgets",
    "DistanceResult",
    "BudgetExceeded",
    "min_distance",
    "min_distance_exhaustive",
    "min_distance_column_dependence",
    "low_weight_search_isd",
]

DEFAULT_EXHAUSTIVE_BUDGET = 1 << 26
DEFAULT_SUBSET_BUDGET = 5 * 10**8
DEFAULT_ISD_ITERATIONS = 10**5


@dataclass(frozen=True)
class Budgets:
    exhaustive: int = DEFAULT_EXHAUSTIVE_BUDGET
    subsets: int = DEFAULT_SUBSET_BUDGET
    isd_iterations: int = DEFAULT_ISD_ITERATIONS


@dataclass(frozen=True)
class DistanceResult:
    d: int
    witness: Tuple[int, ...]
    method: str  # exhaustive | column-dependence | hybrid
    work: int
    seed: Optional[int] = None
    mds: bool = False


class BudgetExceeded(Exception):
    """Raised when no engine can certify the distance within its budget.

    Carries the sound interval [lower, upper] established so far; upper may
    be None when no witness was found.
    """

    def __init__(self, lower: int, upper: Optional[int], message: str):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


def _weight(vec) -> int:
    return int(np.count_nonzero(np.asarray(vec)))


def _verify_witness(code: LinearCode, vec: np.ndarray, weight: int) -> None:
    if _weight(vec) != weight:
        raise AssertionError("witness weight mismatch")
    if not code.contains(vec):
        raise AssertionError("witness is not a codeword")


def _finish(code: LinearCode, d: int, witness: np.ndarray, method: str,
            work: int, seed: Optional[int] = None) -> DistanceResult:
    _verify_witness(code, witness, d)
    singleton = code.n - code.k + 1
    if d > singleton:
        raise AssertionError("distance exceeds the Singleton bound")
    return DistanceResult(
        d=d,
        witness=tuple(int(v) for v in witness),
        method=method,
        work=work,
        seed=seed,
        mds=(d == singleton),
    )


# -- exhaustive engine ------------------------------------------------------

def min_distance_exhaustive(code: LinearCode, budget: int = DEFAULT_EXHAUSTIVE_BUDGET,
                            chunk: int = 1 << 14) -> DistanceResult:
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    f = code.field
    q, k, n = f.q, code.k, code.n
    total = q**k
    if total - 1 > budget:
        raise BudgetExceeded(1, None, f"q^k = {total} exceeds exhaustive budget {budget}")
    gen = code.gen.array
    best_w = n + 1
    best_word = None
    powers = np.array([q**i for i in range(k)], dtype=np.int64)
    for start in range(1, total, chunk):
        stop = min(start + chunk, total)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % q
        words = np.zeros((len(idx), n), dtype=np.int16)
        for row in range(k):
            coefs = digits[:, row].astype(np.int16)
            nz = np.nonzero(coefs)[0]
            if nz.size:
                words[nz] = f.add[words[nz], f.mul[coefs[nz][:, None], gen[row][None, :]]]
        weights = np.count_nonzero(words, axis=1)
        w_min = int(weights.min())
        if w_min < best_w:
            best_w = w_min
            best_word = words[int(weights.argmin())].copy()
    return _finish(code, best_w, best_word, "exhaustive", total - 1)


# -- column-dependence engine ----------------------------------------------

def _dependence_raw(code: LinearCode, w_max: int, budget: int):
    """Run the DFS kernel; returns (status, subset or None, nodes)."""
    h = code.parity_check_matrix()
    f = code.field
    cols = np.ascontiguousarray(h.array.T.astype(np.int16))
    if f.q == 2 and h.rows <= 64:
        bits = np.zeros(cols.shape[0], dtype=np.uint64)
        for j in range(h.rows):
            bits |= (cols[:, j].astype(np.uint64)) << np.uint64(j)
        status, size, buf, nodes = _kernels.dependent_subset_search_gf2(
            bits, w_max, budget)
    else:
        status, size, buf, nodes = _kernels.dependent_subset_search(
            cols, w_max, f.mul, f.sub, f.inv, budget)
    subset = [int(buf[t]) for t in range(size)] if status == _kernels.FOUND else None
    return status, subset, nodes


def _witness_from_subset(code: LinearCode, subset) -> np.ndarray:
    h = code.parity_check_matrix()
    sub = MatrixGF(code.field, h.array[:, subset])
    null = sub.right_null_space()
    x = null.array[:, 0]
    word = np.zeros(code.n, dtype=np.int16)
    for pos, val in zip(subset, x):
        word[pos] = val
    return word


def min_distance_column_dependence(code: LinearCode, w_max: int,
                                   budget: int = DEFAULT_SUBSET_BUDGET):
    """Decide whether some <= w_max columns of H are dependent.

    Returns (verdict, witness, nodes): verdict True with a codeword witness of
    weight <= w_max, or False certifying d > w_max.
    """
    if w_max < 1:
        raise ValueError("w_max must be >= 1")
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    status, subset, nodes = _dependence_raw(code, w_max, budget)
    if status == _kernels.BUDGET_EXCEEDED:
        raise BudgetExceeded(1, None, f"subset budget {budget} exhausted after {nodes} nodes")
    if status == _kernels.FOUND:
        word = _witness_from_subset(code, subset)
        _verify_witness(code, word, _weight(word))
        return True, word, nodes
    return False, None, nodes


# -- information-set search -------------------------------------------------

def low_weight_search_isd(code: LinearCode, target_w: int,
                          iterations: int = 500, seed: int = 0) -> Optional[np.ndarray]:
    """Randomized search for a codeword of weight <= target_w.

    Lee-Brickell style: random information set, systematic form, message
    patterns of weight 1 and 2.  A returned vector is always a verified
    codeword of weight <= target_w; None proves nothing.
    """
    f = code.field
    k, n, q = code.k, code.n, f.q
    if k == 0:
        return None
    rng = np.random.default_rng(seed)
    gen = code.gen.array
    for _ in range(iterations):
        perm = rng.permutation(n)
        m = MatrixGF(f, gen[:, perm])
        r, piv = m.rref()
        a = r.array
        if a.shape[0] < k:
            continue
        nonpiv = [c for c in range(n) if c not in set(piv)]
        red = a[:, nonpiv]
        row_wts = 1 + np.count_nonzero(red, axis=1)
        if row_wts.min() <= target_w:
            i = int(row_wts.argmin())
            word = np.zeros(n, dtype=np.int16)
            word[perm] = a[i]
            _verify_witness(code, word, _weight(word))
            return word
        for i in range(k - 1):
            others = red[i + 1:]
            for c in range(1, q):
                comb = f.add[f.mul[c, others], red[i][None, :]]
                wts = 2 + np.count_nonzero(comb, axis=1)
                jrel = int(wts.argmin())
                if wts[jrel] <= target_w:
                    j = i + 1 + jrel
                    full = f.add[f.mul[c, a[j]], a[i]]
                    word = np.zeros(n, dtype=np.int16)
                    word[perm] = full
                    _verify_witness(code, word, _weight(word))
                    return word
    return None


# -- dispatcher -------------------------------------------------------------

def min_distance(code: LinearCode, method: str = "auto",
                 budgets: Budgets = Budgets(), seed: int = 0,
                 upper_hint: Optional[int] = None) -> DistanceResult:
    """Exact minimum distance with certificate and witness.

    ``upper_hint`` (e.g. a table's expected d) lets the hybrid path run the
    witness search at the right weight first; correctness never depends on it.
    """
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    if method not in ("auto", "exhaustive", "dependence", "isd"):
        raise ValueError(f"unknown method {method!r}")
    q, k = code.field.q, code.k
    if method == "exhaustive" or (method == "auto" and q**k - 1 <= budgets.exhaustive):
        return min_distance_exhaustive(code, budgets.exhaustive)
    if method == "isd":
        if upper_hint is None:
            raise ValueError("isd method needs a target weight (upper_hint)")
        word = low_weight_search_isd(code, upper_hint,
                                     iterations=min(budgets.isd_iterations, 2000),
                                     seed=seed)
        if word is None:
            raise BudgetExceeded(1, None, "isd found no witness at the target weight")
        return _finish(code, _weight(word), word, "hybrid", 0, seed)

    # hybrid: ISD for an upper-bound witness, dependence scan for the lower bound
    work = 0
    upper_word = None
    upper = None
    if upper_hint is not None:
        upper_word = low_weight_search_isd(code, upper_hint, iterations=2000, seed=seed)
        if upper_word is not None:
            upper = _weight(upper_word)
    w = 1
    while True:
        if upper is not None and w >= upper:
            return _finish(code, upper, upper_word, "hybrid", work, seed)
        try:
            found, word, nodes = min_distance_column_dependence(code, w, budgets.subsets)
        except BudgetExceeded as exc:
            raise BudgetExceeded(w, upper,
                                 f"distance certified in [{w}, {upper}]") from exc
        work += nodes
        if found:
            d = _weight(word)
            method_name = "column-dependence" if upper_word is None else "hybrid"
            return _finish(code, d, word, method_name, work, seed)
        w += 1
