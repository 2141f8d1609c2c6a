import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringcodes.fields import field_make
from ringcodes.linalg import MatrixGF


def test_rref_known_case_gf2():
    f = field_make(2)
    m = MatrixGF(f, [[1, 1, 0], [1, 0, 1], [0, 1, 1]])
    r, piv = m.rref()
    assert piv == (0, 1)
    assert r.array.tolist() == [[1, 0, 1], [0, 1, 1]]
    assert m.rank() == 2


def test_rref_is_idempotent_and_canonical(rng):
    for q in (2, 3, 4, 5):
        f = field_make(2, 2) if q == 4 else field_make(q)
        for _ in range(20):
            a = MatrixGF(f, rng.integers(0, q, size=(5, 8)).astype(np.int16))
            r, piv = a.rref()
            r2, piv2 = r.rref()
            assert r == r2 and piv == piv2
            # pivot columns are unit columns
            for i, c in enumerate(piv):
                col = r.array[:, c]
                assert col[i] == 1 and np.count_nonzero(col) == 1


def test_matmul_against_python_oracle(rng):
    f = field_make(3, 2)
    a = MatrixGF(f, rng.integers(0, 9, size=(4, 5)).astype(np.int16))
    b = MatrixGF(f, rng.integers(0, 9, size=(5, 3)).astype(np.int16))
    prod = a.matmul(b)
    for i in range(4):
        for j in range(3):
            acc = 0
            for k in range(5):
                acc = int(f.add[acc, f.mul[a.array[i, k], b.array[k, j]]])
            assert prod.array[i, j] == acc


def test_null_spaces(rng):
    for q in (2, 3, 5, 4):
        f = field_make(2, 2) if q == 4 else field_make(q)
        m = MatrixGF(f, rng.integers(0, q, size=(4, 7)).astype(np.int16))
        ns = m.right_null_space()
        assert ns.cols == 7 - m.rank()
        assert m.matmul(ns).is_zero()
        lns = m.transpose().left_null_space()
        assert lns.rows == 7 - m.transpose().rank()
        if lns.rows:
            assert lns.matmul(m.transpose()).is_zero()


def test_rank_nullity_exhaustive_gf2():
    f = field_make(2)
    # every 3x3 binary matrix
    for bits in range(512):
        data = [[(bits >> (3 * i + j)) & 1 for j in range(3)] for i in range(3)]
        m = MatrixGF(f, data)
        assert m.rank() + m.right_null_space().cols == 3


def test_row_space_predicates(rng):
    f = field_make(5)
    a = MatrixGF(f, rng.integers(0, 5, size=(3, 6)).astype(np.int16))
    # scaling and row operations preserve the row space
    scaled = MatrixGF(f, f.mul[2, a.array])
    assert a.row_space_equal(scaled)
    for row in a.array:
        assert a.row_space_contains(row)
    summed = f.add[a.array[0], a.array[1]]
    assert a.row_space_contains(summed)


def test_stack_and_transpose():
    f = field_make(2)
    a = MatrixGF(f, [[1, 0], [0, 1]])
    b = MatrixGF(f, [[1, 1]])
    s = a.stack(b)
    assert s.rows == 3 and s.rank() == 2
    assert a.transpose() == a
    with pytest.raises(ValueError):
        a.stack(MatrixGF(f, [[1, 0, 0]]))


def test_entry_validation():
    f = field_make(3)
    with pytest.raises(ValueError):
        MatrixGF(f, [[0, 3]])
    with pytest.raises(ValueError):
        MatrixGF(f, [[0, -1]])


def test_identity_and_zeros():
    f = field_make(7)
    i = MatrixGF.identity(f, 4)
    z = MatrixGF.zeros(f, 2, 4)
    assert i.rank() == 4
    assert z.rank() == 0 and z.is_zero()
    assert i.matmul(i) == i


@settings(max_examples=60, deadline=None)
@given(
    q=st.sampled_from([2, 3, 4, 5]),
    rows=st.integers(1, 6),
    cols=st.integers(1, 8),
    data=st.data(),
)
def test_rref_properties_hypothesis(q, rows, cols, data):
    f = field_make(2, 2) if q == 4 else field_make(q)
    entries = data.draw(st.lists(st.integers(0, q - 1),
                                 min_size=rows * cols, max_size=rows * cols))
    m = MatrixGF(f, np.array(entries, dtype=np.int16).reshape(rows, cols))
    r, piv = m.rref()
    assert r.rows == len(piv) == m.rank()
    assert m.row_space_equal(r)
    # the null space really annihilates, and dimensions add up
    ns = m.right_null_space()
    assert ns.cols == cols - m.rank()
    if ns.cols:
        assert m.matmul(ns).is_zero()


def test_pretty_uses_field_tokens():
    f = field_make(2, 2)
    m = MatrixGF(f, [[0, 1, 2, 3]])
    assert m.pretty() == "0 1 a a^2"
