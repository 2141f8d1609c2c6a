import numpy as np
import pytest

from ringcodes.codes import LinearCode
from ringcodes.fields import field_make
from ringcodes.linalg import MatrixGF


def random_code(q: int, n: int, k: int, rng: np.random.Generator) -> LinearCode:
    """A random [n, <=k] code over GF(q) (dimension may drop by rank)."""
    f = field_make(2, 2) if q == 4 else field_make(q)
    raw = MatrixGF(f, rng.integers(0, q, size=(k, n)).astype(np.int16))
    gen, _ = raw.rref()
    return LinearCode(f, n, gen)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
