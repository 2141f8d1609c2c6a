"""Structural predicates for checkable codes.

Covers code-checkability of a ring, verification and search of check
elements, reversibility, complementary duality (LCD), MDS detection, and a
brute-force ideal oracle for tiny rings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .codes import (
    LinearCode,
    annihilator_code,
    code_from_generator_element,
)
from .fields import GF
from .groups import AbelianGroup
from .groupring import GroupRingElement, from_coeff_values
from .linalg import MatrixGF

__all__ = [
    "ring_is_code_checkable",
    "is_semisimple",
    "verify_check_element",
    "find_check_element",
    "is_reversible",
    "is_reversal_closed",
    "hull_dimension",
    "is_lcd",
    "mds_check",
    "reversibility_equivalences",
    "nilpotent_intersection_check",
    "enumerate_ideals_bruteforce",
    "ClassificationReport",
    "classify_code",
]


def ring_is_code_checkable(field: GF, group: AbelianGroup) -> bool:
    """Every non-trivial ideal of F_qG is checkable iff Sylow_p(G) is cyclic."""
    return group.sylow_p_cyclic(field.p)


def is_semisimple(field: GF, group: AbelianGroup) -> bool:
    return group.order % field.p != 0


def verify_check_element(u: GroupRingElement, v: GroupRingElement):
    """Check that v is a check element for the code generated by u.

    Returns (ok, evidence) where evidence records the three conditions:
    u*v = 0, rank(V) = n - rank(U), and Ann(v) = F_qG u.
    """
    u._check(v)
    n = u.group.order
    product_zero = (u * v).is_zero()
    rank_u = u.regular_matrix().rank()
    rank_v = v.regular_matrix().rank()
    rank_ok = rank_v == n - rank_u
    ann_ok = False
    if product_zero and rank_ok and not u.is_zero():
        ann_ok = annihilator_code(v) == code_from_generator_element(u)
    evidence = {
        "product_zero": product_zero,
        "rank_u": rank_u,
        "rank_v": rank_v,
        "rank_condition": rank_ok,
        "annihilator_equals_code": ann_ok,
    }
    return product_zero and rank_ok and ann_ok, evidence


def find_check_element(u: GroupRingElement, max_tries: int = 10**5,
                       seed: int = 0) -> Optional[GroupRingElement]:
    """Search Ann(u) for a check element of F_qG u.

    Deterministic order: null-space basis vectors first, then seeded random
    field combinations of the basis.  Any hit is validated by
    verify_check_element before being returned.
    """
    if not u.is_zero_divisor():
        raise ValueError("u must be a zero-divisor")
    f, group = u.field, u.group
    n = group.order
    U = u.regular_matrix()
    k = U.rank()
    basis = U.left_null_space().array  # rows span Ann(u)
    target_rank = n - k

    def try_candidate(vec) -> Optional[GroupRingElement]:
        if not vec.any():
            return None
        v = from_coeff_values(vec, f, group)
        if v.regular_matrix().rank() != target_rank:
            return None
        ok, _ = verify_check_element(u, v)
        return v if ok else None

    tries = 0
    for row in basis:
        v = try_candidate(row)
        tries += 1
        if v is not None:
            return v
        if tries >= max_tries:
            return None
    rng = np.random.default_rng(seed)
    dim = basis.shape[0]
    while tries < max_tries:
        coefs = rng.integers(0, f.q, size=dim).astype(np.int16)
        vec = np.zeros(n, dtype=np.int16)
        for i in np.nonzero(coefs)[0]:
            vec = f.add[vec, f.mul[coefs[i], basis[i]]]
        v = try_candidate(vec)
        tries += 1
        if v is not None:
            return v
    return None


def is_reversible(code: LinearCode) -> bool:
    """Reversibility w.r.t. the canonical list: u^(-1) in F_qG u."""
    prov = code.provenance
    if prov is None or prov.generator is None:
        raise ValueError("reversibility needs the code's generator element")
    rev = prov.generator.involution()
    return code.gen.row_space_contains(np.array(rev.coeffs, dtype=np.int16))


def is_reversal_closed(code: LinearCode) -> bool:
    """Closure of the code under coefficient-vector reversal (no provenance
    needed; agrees with is_reversible on codes with a generator element)."""
    return all(
        code.gen.row_space_contains(row[::-1].copy()) for row in code.gen.array
    )


def hull_dimension(code: LinearCode) -> int:
    dual = code.dual()
    if code.k == 0 or dual.k == 0:
        return 0
    stacked = code.gen.stack(dual.gen)
    return code.k + dual.k - stacked.rank()


def is_lcd(code: LinearCode) -> bool:
    return hull_dimension(code) == 0


def mds_check(n: int, k: int, d: int) -> bool:
    return d == n - k + 1


def reversibility_equivalences(u: GroupRingElement, v: GroupRingElement) -> Dict[str, bool]:
    """Jointly check the machine-verifiable reversibility equivalences.

    All entries must agree: membership u^(-1) in F_qGu, ideal equality
    F_qGu = F_qGu^(-1), the same two for v, and reversibility of both codes
    under the coefficient-reversal map.  Raises if they disagree.
    """
    ok, _ = verify_check_element(u, v)
    if not ok:
        raise ValueError("(u, v) is not a verified generator/check pair")
    cu = code_from_generator_element(u)
    cv = code_from_generator_element(v)
    cu_inv = code_from_generator_element(u.involution())
    cv_inv = code_from_generator_element(v.involution())
    evidence = {
        "u_membership": is_reversible(cu),
        "u_ideal_equality": cu == cu_inv,
        "u_code_reversal_closed": is_reversal_closed(cu),
        "v_membership": is_reversible(cv),
        "v_ideal_equality": cv == cv_inv,
        "v_code_reversal_closed": is_reversal_closed(cv),
    }
    values = set(evidence.values())
    if len(values) != 1:
        raise AssertionError(f"reversibility equivalences disagree: {evidence}")
    return evidence


def nilpotent_intersection_check(u: GroupRingElement, v: GroupRingElement) -> bool:
    """In the semisimple case, F_qGu and F_qGv intersect trivially."""
    ok, _ = verify_check_element(u, v)
    if not ok:
        raise ValueError("(u, v) is not a verified generator/check pair")
    if not is_semisimple(u.field, u.group):
        raise ValueError("requires a semisimple group ring (p does not divide n)")
    cu = code_from_generator_element(u)
    cv = code_from_generator_element(v)
    stacked = cu.gen.stack(cv.gen)
    return stacked.rank() == cu.k + cv.k


# -- brute-force ideal oracle ----------------------------------------------

def _all_elements(field: GF, group: AbelianGroup):
    n = group.order
    for tup in itertools.product(range(field.q), repeat=n):
        yield from_coeff_values(tup, field, group)


def enumerate_ideals_bruteforce(field: GF, group: AbelianGroup,
                                max_ring_size: int = 1 << 20):
    """Enumerate all ideals of a tiny F_qG and decide checkability of each.

    Principal ideals are collected as canonical generator matrices, closed
    under pairwise ideal sums, and each non-trivial ideal is checked against
    Ann(v) for every v in the ring.  Returns (all_checkable, report) where
    report maps each non-trivial ideal (as a canonical matrix key) to its
    dimension, checkability, and a check element when one exists.
    """
    n = group.order
    if field.q**n > max_ring_size:
        raise ValueError(f"ring size q^n = {field.q**n} exceeds budget {max_ring_size}")

    # all principal ideals
    ideals: Dict[bytes, MatrixGF] = {}
    for x in _all_elements(field, group):
        gen, _ = x.regular_matrix().rref()
        ideals.setdefault(gen.array.tobytes(), gen)
    # close under pairwise sums (every ideal is a sum of principal ideals)
    changed = True
    while changed:
        changed = False
        current = list(ideals.values())
        for a in current:
            for b in current:
                s, _ = a.stack(b).rref()
                kb = s.array.tobytes()
                if kb not in ideals:
                    ideals[kb] = s
                    changed = True

    # annihilator ideals, indexed by canonical form, with a witness v
    ann_by_key: Dict[bytes, GroupRingElement] = {}
    for v in _all_elements(field, group):
        ann = v.regular_matrix().left_null_space()
        r, _ = ann.rref()
        ann_by_key.setdefault(r.array.tobytes(), v)

    report = []
    all_checkable = True
    for kb, gen in sorted(ideals.items(), key=lambda kv: (kv[1].rows, kv[0])):
        dim = gen.rows
        if dim == 0 or dim == n:
            continue  # trivial ideals are excluded from the verdict
        v = ann_by_key.get(kb)
        checkable = v is not None
        all_checkable = all_checkable and checkable
        report.append({
            "dimension": dim,
            "generator_matrix": gen,
            "checkable": checkable,
            "check_element": v,
        })
    return all_checkable, report


# -- aggregate report -------------------------------------------------------

@dataclass(frozen=True)
class ClassificationReport:
    n: int
    k: int
    d: Optional[int]
    checkable: bool
    check_element: Optional[GroupRingElement]
    reversible: bool
    lcd: bool
    mds: Optional[bool]
    semisimple: bool
    ring_code_checkable: bool
    diagnostics: Dict[str, object] = dc_field(default_factory=dict)


def classify_code(u: GroupRingElement, v: Optional[GroupRingElement] = None,
                  d: Optional[int] = None, find_check: bool = True,
                  seed: int = 0) -> ClassificationReport:
    """Full per-code classification; d is taken as given when supplied."""
    field, group = u.field, u.group
    code = code_from_generator_element(u)
    diagnostics: Dict[str, object] = {}
    check = None
    checkable = False
    if v is not None:
        ok, evidence = verify_check_element(u, v)
        diagnostics["check_evidence"] = evidence
        if ok:
            checkable = True
            check = v
    if not checkable and find_check and u.is_zero_divisor():
        found = find_check_element(u, seed=seed)
        if found is not None:
            checkable = True
            check = found
    semi = is_semisimple(field, group)
    reversible = is_reversible(code)
    lcd = is_lcd(code)
    if semi and lcd != reversible:
        raise AssertionError("semisimple ring but LCD and reversibility disagree")
    return ClassificationReport(
        n=code.n,
        k=code.k,
        d=d,
        checkable=checkable,
        check_element=check,
        reversible=reversible,
        lcd=lcd,
        mds=mds_check(code.n, code.k, d) if d is not None else None,
        semisimple=semi,
        ring_code_checkable=ring_is_code_checkable(field, group),
        diagnostics=diagnostics,
    )
