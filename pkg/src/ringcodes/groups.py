"""Finite abelian groups as products of cyclic groups.

The canonical element list enumerates x_1^{j_1} x_2^{j_2} ... x_r^{j_r} with
j_1 varying fastest, so index = 1 + j_1 + n_1 j_2 + n_1 n_2 j_3 + ...  All
public indices are 1-based; internal tables are 0-based.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np

from .fields import is_prime

__all__ = ["AbelianGroup", "parse_group"]


class AbelianGroup:
    def __init__(self, factors: Sequence[int]):
        factors = tuple(int(f) for f in factors)
        if not factors or any(f < 1 for f in factors):
            raise ValueError(f"factor orders must be positive, got {factors}")
        self.factors = factors
        self.order = 1
        for f in factors:
            self.order *= f
        self._strides = []
        s = 1
        for f in factors:
            self._strides.append(s)
            s *= f
        n = self.order
        # 0-based multiplication and inverse tables; n <= a few hundred here
        exps = np.array([self._exps0(i) for i in range(n)], dtype=np.int64)
        radix = np.array(factors, dtype=np.int64)
        strides = np.array(self._strides, dtype=np.int64)
        summed = (exps[:, None, :] + exps[None, :, :]) % radix
        self._mul = (summed * strides).sum(axis=2).astype(np.int32)
        self._inv = (((-exps) % radix) * strides).sum(axis=1).astype(np.int32)
        self._mul.setflags(write=False)
        self._inv.setflags(write=False)
        if not self.verify_list_property():
            raise AssertionError("canonical list violates the reversal pivot property")

    # -- index <-> exponent vector ---------------------------------------

    def _exps0(self, idx0: int) -> List[int]:
        out = []
        for f in self.factors:
            out.append(idx0 % f)
            idx0 //= f
        return out

    def index_of(self, exponents: Sequence[int]) -> int:
        if len(exponents) != len(self.factors):
            raise ValueError("wrong number of exponents")
        idx0 = 0
        for e, f, s in zip(exponents, self.factors, self._strides):
            if not 0 <= e < f:
                raise ValueError(f"exponent {e} out of range for factor of order {f}")
            idx0 += e * s
        return idx0 + 1

    def exponents_of(self, index: int) -> Tuple[int, ...]:
        self._check_index(index)
        return tuple(self._exps0(index - 1))

    def _check_index(self, index: int) -> None:
        if not 1 <= index <= self.order:
            raise ValueError(f"index {index} out of range 1..{self.order}")

    # -- group law --------------------------------------------------------

    def mul_index(self, i: int, j: int) -> int:
        self._check_index(i)
        self._check_index(j)
        return int(self._mul[i - 1, j - 1]) + 1

    def inverse_index(self, i: int) -> int:
        self._check_index(i)
        return int(self._inv[i - 1]) + 1

    # -- structural predicates --------------------------------------------

    def sylow_p_cyclic(self, p: int) -> bool:
        """True iff the Sylow p-subgroup is cyclic.

        For a product of cyclic groups that holds exactly when at most one
        factor order is divisible by p.
        """
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return sum(1 for f in self.factors if f % p == 0) <= 1

    def verify_list_property(self) -> bool:
        """Check the pivot identity g_{n-(i-1)} g_i = g_n for all i."""
        n = self.order
        last = n - 1  # 0-based index of g_n
        return all(int(self._mul[n - i, i - 1]) == last for i in range(1, n + 1))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AbelianGroup) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return "C" + "xC".join(str(f) for f in self.factors)

    def notation(self) -> str:
        return "x".join(str(f) for f in self.factors)


def parse_group(text: str) -> AbelianGroup:
    """Parse textual notation like ``6x12`` into a group."""
    parts = [p.strip() for p in text.lower().split("x")]
    try:
        factors = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"bad group notation {text!r}; expected e.g. '6x12'") from None
    return AbelianGroup(factors)
