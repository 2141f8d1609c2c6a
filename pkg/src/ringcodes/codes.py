"""Linear codes arising from group rings.

A LinearCode stores its canonical reduced row-echelon generator matrix, so
code equality is structural, plus optional group-ring provenance (generator
element u, check element v).  Coordinate positions are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence, Set, Tuple

import numpy as np

from .fields import GF
from .groups import AbelianGroup
from .groupring import GroupRingElement
from .linalg import MatrixGF

__all__ = [
    "Provenance",
    "LinearCode",
    "code_from_generator_element",
    "code_from_submodule",
    "annihilator_code",
    "zero_code",
    "full_code",
]


@dataclass(frozen=True)
class Provenance:
    group: AbelianGroup
    generator: Optional[GroupRingElement] = None
    check: Optional[GroupRingElement] = None


@dataclass(frozen=True)
class LinearCode:
    field: GF
    length: int
    gen: MatrixGF  # canonical rref, full row rank
    provenance: Optional[Provenance] = None
    label: Optional[str] = None

    @property
    def n(self) -> int:
        return self.length

    @property
    def k(self) -> int:
        return self.gen.rows

    def cardinality(self) -> int:
        return self.field.q**self.k

    def contains(self, vector) -> bool:
        if self.k == 0:
            return not np.asarray(vector).any()
        return self.gen.row_space_contains(vector)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.length == other.length
            and self.gen == other.gen
        )

    def __hash__(self) -> int:
        return hash((self.field, self.length, self.gen))

    # -- derived matrices --------------------------------------------------

    def parity_check_matrix(self) -> MatrixGF:
        """An (n-k) x n matrix H with gen @ H^T = 0 and rank n-k.

        When provenance carries a check element v, H is built from n-k
        independent columns of v's regular matrix and validated against the
        generic right-null-space construction.
        """
        fallback = self.gen.right_null_space().transpose()
        prov = self.provenance
        if prov is not None and prov.check is not None:
            V = prov.check.regular_matrix()
            vt = V.transpose()
            vt_rref, piv = vt.rref()
            h = MatrixGF(self.field, vt.array[list(piv)])
            if h.rows == self.n - self.k and h.row_space_equal(fallback):
                return h
        return fallback

    def dual(self) -> "LinearCode":
        h = self.parity_check_matrix()
        gen, _ = h.rref()
        return LinearCode(self.field, self.length, gen)

    def standard_generator_matrix(self) -> MatrixGF:
        return self.gen

    def shorten(self, positions: Iterable[int]) -> "LinearCode":
        """Keep codewords vanishing on the given 1-based positions, delete them."""
        pos = sorted(set(int(p) for p in positions))
        if any(p < 1 or p > self.length for p in pos):
            raise ValueError(f"positions out of range 1..{self.length}: {pos}")
        if not pos:
            return LinearCode(self.field, self.length, self.gen, self.provenance, self.label)
        cols = [p - 1 for p in pos]
        restricted = MatrixGF(self.field, self.gen.array[:, cols])
        x = restricted.left_null_space()  # messages whose codewords vanish on pos
        words = x.matmul(self.gen)
        keep = [c for c in range(self.length) if c not in set(cols)]
        sub = MatrixGF(self.field, words.array[:, keep] if words.rows else
                       np.zeros((0, len(keep)), dtype=np.int16))
        gen, _ = sub.rref()
        return LinearCode(self.field, len(keep), gen)


def zero_code(field: GF, n: int) -> LinearCode:
    return LinearCode(field, n, MatrixGF.zeros(field, 0, n))


def full_code(field: GF, n: int) -> LinearCode:
    return LinearCode(field, n, MatrixGF.identity(field, n))


def code_from_generator_element(u: GroupRingElement) -> LinearCode:
    """The ideal generated by u: the row space of its regular matrix."""
    if u.is_zero():
        raise ValueError("generator element is zero; use zero_code for the zero code")
    gen, _ = u.regular_matrix().rref()
    prov = Provenance(group=u.group, generator=u)
    return LinearCode(u.field, u.group.order, gen, prov)


def code_from_submodule(
    u: GroupRingElement, subset: Sequence[int]
) -> Tuple[LinearCode, bool]:
    """Code spanned by {g*u : g in S} for S a subset of 1-based group indices.

    Returns the code and whether it is an ideal, i.e. |S| = rank(U).
    """
    if not subset:
        raise ValueError("subset S must be non-empty")
    group = u.group
    U = u.regular_matrix()
    rows = []
    for idx in subset:
        group._check_index(idx)
        rows.append(U.array[idx - 1])  # row i of U is coeffs(g_i * u)
    span = MatrixGF(u.field, np.array(rows, dtype=np.int16))
    if span.rank() != len(rows):
        raise ValueError("S*u is linearly dependent")
    gen, _ = span.rref()
    is_ideal = U.rank() == len(rows)
    prov = Provenance(group=group, generator=u) if is_ideal else Provenance(group=group)
    return LinearCode(u.field, group.order, gen, prov), is_ideal


def annihilator_code(v: GroupRingElement) -> LinearCode:
    """The code {y : y*v = 0}: the left null space of v's regular matrix."""
    basis = v.regular_matrix().left_null_space()
    gen, _ = basis.rref()
    prov = Provenance(group=v.group, check=v)
    return LinearCode(v.field, v.group.order, gen, prov)


def with_check_element(code: LinearCode, v: GroupRingElement) -> LinearCode:
    prov = code.provenance or Provenance(group=v.group)
    return replace(code, provenance=replace(prov, check=v))
