"""Group-ring elements of F_qG over the canonical element list.

A GroupRingElement is a length-n coefficient vector (integer-encoded field
values) indexed by the canonical list g_1..g_n of its group.  The regular
representation sends u to the n x n matrix U with U[i][j] the coefficient of
u at g_i^{-1} g_j, so the coefficient row vector of w*u equals coeffs(w) @ U.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence, Tuple

import numpy as np

from .fields import GF, FieldElement
from .groups import AbelianGroup
from .linalg import MatrixGF

__all__ = ["GroupRingElement", "all_ones", "from_string", "zero", "one"]


def _conv_index_table(group: AbelianGroup) -> np.ndarray:
    """0-based table T[i, j] = index of g_i^{-1} g_j (cached on the group)."""
    cached = getattr(group, "_conv_table", None)
    if cached is not None:
        return cached
    inv = group._inv
    table = group._mul[inv, :]
    table.setflags(write=False)
    group._conv_table = table
    return table


@dataclass(frozen=True)
class GroupRingElement:
    field: GF
    group: AbelianGroup
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError(
                f"coefficient vector has length {len(self.coeffs)}, "
                f"group order is {self.group.order}"
            )

    # -- helpers -----------------------------------------------------------

    def _check(self, other: "GroupRingElement") -> None:
        if self.field != other.field or self.group != other.group:
            raise ValueError("operands live in different group rings")

    def _vec(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int16)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def coefficient(self, index: int) -> FieldElement:
        """Coefficient at g_index (1-based)."""
        self.group._check_index(index)
        return self.field.element(self.coeffs[index - 1])

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        s = self.field.add[self._vec(), other._vec()]
        return GroupRingElement(self.field, self.group, tuple(int(v) for v in s))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        s = self.field.sub[self._vec(), other._vec()]
        return GroupRingElement(self.field, self.group, tuple(int(v) for v in s))

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(
            self.field, self.group, tuple(int(self.field.neg[c]) for c in self.coeffs)
        )

    def scalar_mul(self, c: FieldElement) -> "GroupRingElement":
        if c.field != self.field:
            raise ValueError("scalar from a different field")
        s = self.field.mul[c.value, self._vec()]
        return GroupRingElement(self.field, self.group, tuple(int(v) for v in s))

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        """Convolution over the group; commutative since G is abelian."""
        self._check(other)
        f = self.field
        table = _conv_index_table(self.group)
        x = self._vec()
        y = other._vec()
        acc = np.zeros(self.group.order, dtype=np.int16)
        for i in np.nonzero(x)[0]:
            acc = f.add[acc, f.mul[x[i], y[table[i]]]]
        return GroupRingElement(f, self.group, tuple(int(v) for v in acc))

    # -- structure maps ----------------------------------------------------

    def involution(self) -> "GroupRingElement":
        """Coefficient at g becomes the input's coefficient at g^{-1}."""
        inv = self.group._inv
        vec = self._vec()[inv]
        return GroupRingElement(self.field, self.group, tuple(int(v) for v in vec))

    def reverse(self) -> "GroupRingElement":
        """Reversal of the coefficient vector w.r.t. the canonical list."""
        return GroupRingElement(self.field, self.group, tuple(reversed(self.coeffs)))

    def regular_matrix(self) -> MatrixGF:
        table = _conv_index_table(self.group)
        return MatrixGF(self.field, self._vec()[table])

    def is_unit(self) -> bool:
        return self.regular_matrix().rank() == self.group.order

    def is_zero_divisor(self) -> bool:
        return not self.is_zero() and self.regular_matrix().rank() < self.group.order

    # -- serialization -----------------------------------------------------

    def to_string(self) -> str:
        return "".join(self.field.format_value(c) for c in self.coeffs)

    def __str__(self) -> str:
        return self.to_string()


def zero(field: GF, group: AbelianGroup) -> GroupRingElement:
    return GroupRingElement(field, group, (0,) * group.order)


def one(field: GF, group: AbelianGroup) -> GroupRingElement:
    return GroupRingElement(field, group, (1,) + (0,) * (group.order - 1))


def all_ones(field: GF, group: AbelianGroup) -> GroupRingElement:
    """The sum of all group elements; always a zero-divisor for n > 1."""
    return GroupRingElement(field, group, (1,) * group.order)


def from_string(s: str, field: GF, group: AbelianGroup) -> GroupRingElement:
    values = field.tokenize(s)
    if len(values) != group.order:
        raise ValueError(
            f"coefficient string has {len(values)} entries, group order is {group.order}"
        )
    return GroupRingElement(field, group, tuple(values))


def from_coeff_values(values: Sequence[int], field: GF, group: AbelianGroup) -> GroupRingElement:
    return GroupRingElement(field, group, tuple(int(v) for v in values))
