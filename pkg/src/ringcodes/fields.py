"""Exact arithmetic in GF(p^m) via precomputed operation tables.

Elements are encoded as integers in [0, q): the value sum(c_i * p**i) of the
polynomial-basis coefficient vector (c_0, ..., c_{m-1}).  All arithmetic goes
through dense numpy lookup tables, so matrix code can operate on raw integer
arrays with fancy indexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

import numpy as np

__all__ = [
    "GF",
    "FieldElement",
    "field_make",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_mul_mod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> List[int]:
    # modulus is monic of degree m; result reduced to degree < m
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for deg in range(len(prod) - 1, m - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for j in range(m + 1):
                prod[deg - m + j] = (prod[deg - m + j] - c * modulus[j]) % p
    out = prod[:m]
    out += [0] * (m - len(out))
    return out


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Brute-force root/factor test for a monic polynomial over GF(p)."""
    m = len(poly) - 1
    if m == 1:
        return True
    # trial division by all monic polynomials of degree 1..m//2
    for deg in range(1, m // 2 + 1):
        for idx in range(p**deg):
            divisor = _int_to_coeffs(idx, p, deg) + [1]
            if _poly_divides(divisor, poly, p):
                return False
    return True


def _poly_divides(d: Sequence[int], f: Sequence[int], p: int) -> bool:
    rem = list(f)
    dd = len(d) - 1
    inv_lead = pow(d[-1], -1, p)
    while len(rem) - 1 >= dd:
        c = (rem[-1] * inv_lead) % p
        if c:
            for j in range(dd + 1):
                k = len(rem) - 1 - dd + j
                rem[k] = (rem[k] - c * d[j]) % p
        rem.pop()
        while rem and rem[-1] == 0 and len(rem) - 1 >= dd:
            rem.pop()
    return all(c == 0 for c in rem)


def _int_to_coeffs(value: int, p: int, length: int) -> List[int]:
    out = []
    for _ in range(length):
        out.append(value % p)
        value //= p
    return out


def _find_modulus(p: int, m: int) -> Tuple[int, ...]:
    """Smallest irreducible monic modulus, scanning integer encodings upward."""
    if m == 1:
        return (0, 1)
    for idx in range(p**m):
        cand = _int_to_coeffs(idx, p, m) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class GF:
    """A finite field GF(p^m) with dense add/mul/neg/inv tables."""

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"degree must be >= 1, got {m}")
        self.p = p
        self.m = m
        self.q = p**m
        if modulus is None:
            modulus = _find_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _is_irreducible(modulus, p):
                raise ValueError("modulus is reducible")
        self.modulus = tuple(modulus)
        self._build_tables()

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        coeffs = [_int_to_coeffs(v, p, m) for v in range(q)]
        add = np.zeros((q, q), dtype=np.int16)
        mul = np.zeros((q, q), dtype=np.int16)
        for a in range(q):
            ca = coeffs[a]
            for b in range(a, q):
                cb = coeffs[b]
                s = sum((x + y) % p * p**i for i, (x, y) in enumerate(zip(ca, cb)))
                add[a, b] = add[b, a] = s
                pr = _poly_mul_mod(ca, cb, self.modulus, p)
                v = sum(c * p**i for i, c in enumerate(pr))
                mul[a, b] = mul[b, a] = v
        neg = np.zeros(q, dtype=np.int16)
        inv = np.zeros(q, dtype=np.int16)
        for a in range(q):
            neg[a] = sum((-c) % p * p**i for i, c in enumerate(coeffs[a]))
            if a:
                row = mul[a]
                inv[a] = int(np.nonzero(row == 1)[0][0])
        sub = add[:, neg]  # sub[a, b] = a + (-b)
        for t in (add, mul, neg, inv, sub):
            t.setflags(write=False)
        self.add = add
        self.mul = mul
        self.neg = neg
        self.inv = inv
        self.sub = sub

    # -- element surface -------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise ValueError(f"value {value} out of range for GF({self.q})")
        return FieldElement(self, value)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, v) for v in range(self.q))

    # -- token alphabet --------------------------------------------------
    # Prime fields with p <= 9 use single decimal digits; GF(4) uses the
    # alphabet {0, 1, a, a^2}.  Larger fields format as digits when q <= 9.

    _GF4_TOKENS = {0: "0", 1: "1", 2: "a", 3: "a^2"}

    def format_value(self, value: int) -> str:
        if not 0 <= value < self.q:
            raise ValueError(f"value {value} out of range for GF({self.q})")
        if (self.p, self.m) == (2, 2):
            return self._GF4_TOKENS[value]
        if self.q <= 9:
            return str(value)
        raise ValueError(f"no concatenable token alphabet for GF({self.q})")

    def parse_value(self, token: str) -> int:
        if (self.p, self.m) == (2, 2):
            for v, t in self._GF4_TOKENS.items():
                if token == t:
                    return v
            raise ValueError(f"token {token!r} not in GF(4) alphabet")
        if self.q <= 9:
            if len(token) == 1 and token.isdigit() and int(token) < self.q:
                return int(token)
            raise ValueError(f"token {token!r} not in GF({self.q}) alphabet")
        raise ValueError(f"no concatenable token alphabet for GF({self.q})")

    def tokenize(self, s: str) -> List[int]:
        """Split a concatenated coefficient string; greedy for GF(4)."""
        if (self.p, self.m) == (2, 2):
            out = []
            i = 0
            while i < len(s):
                if s.startswith("a^2", i):
                    out.append(3)
                    i += 3
                elif s[i] == "a":
                    out.append(2)
                    i += 1
                elif s[i] in "01":
                    out.append(int(s[i]))
                    i += 1
                else:
                    raise ValueError(f"bad GF(4) character {s[i]!r} at position {i}")
            return out
        return [self.parse_value(c) for c in s]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


@dataclass(frozen=True)
class FieldElement:
    """A value-like element of a GF instance."""

    field: GF
    value: int

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(_int_to_coeffs(self.value, self.field.p, self.field.m))

    def _check(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise ValueError("operands belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, int(self.field.add[self.value, other.value]))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, int(self.field.sub[self.value, other.value]))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, int(self.field.mul[self.value, other.value]))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, int(self.field.neg[self.value]))

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return FieldElement(self.field, int(self.field.inv[self.value]))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.format_value(self.value)


@lru_cache(maxsize=None)
def field_make(p: int, m: int = 1) -> GF:
    """Construct GF(p^m) with the deterministic smallest irreducible modulus."""
    return GF(p, m)


def fe_parse(token: str, field: GF) -> FieldElement:
    return field.element(field.parse_value(token))


def fe_format(x: FieldElement) -> str:
    return x.field.format_value(x.value)
