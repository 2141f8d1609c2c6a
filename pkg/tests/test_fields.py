import itertools

import pytest

from ringcodes.fields import GF, FieldElement, field_make, fe_format, fe_parse, is_prime


SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3), (5, 2)]


def test_gf4_modulus_and_generator_relation():
    f = field_make(2, 2)
    assert f.modulus == (1, 1, 1)  # x^2 + x + 1
    a = f.element(2)
    assert a * a == f.element(3)  # a^2 = 1 + a
    assert (a * a).coeffs == (1, 1)
    assert a * (a * a) == f.one()  # a^3 = 1


def test_prime_field_is_mod_p():
    f = field_make(5)
    assert (f.element(2) + f.element(3)).value == 0
    assert f.element(2).inverse().value == 3
    assert (-f.element(1)).value == 4


def test_gf9_modulus_matches_exhaustive_irreducibility_scan():
    # oracle: scan all monic quadratics over GF(3) for the first with no root
    def has_root(c0, c1):
        return any((x * x + c1 * x + c0) % 3 == 0 for x in range(3))

    expected = None
    for idx in range(9):
        c0, c1 = idx % 3, idx // 3
        if not has_root(c0, c1):
            expected = (c0, c1, 1)
            break
    assert field_make(3, 2).modulus == expected


def test_field_make_rejects_bad_input():
    with pytest.raises(ValueError):
        field_make(4, 1)
    with pytest.raises(ValueError):
        field_make(2, 0)


def test_inverse_of_zero_fails():
    with pytest.raises(ZeroDivisionError):
        field_make(3).zero().inverse()


def test_mixed_field_operands_rejected():
    with pytest.raises(ValueError):
        field_make(3).one() + field_make(5).one()


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, m):
    f = field_make(p, m)
    assert f.q <= 25
    elems = list(f.elements())
    for x, y in itertools.product(elems, repeat=2):
        assert x + y == y + x
        assert x * y == y * x
    for x, y, z in itertools.product(elems, repeat=3):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
    for x in elems:
        assert x + f.zero() == x
        assert x * f.one() == x
        assert x + (-x) == f.zero()
        if x:
            assert x * x.inverse() == f.one()


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_multiplicative_orders_divide_q_minus_1(p, m):
    f = field_make(p, m)
    for x in f.elements():
        if not x:
            continue
        acc = f.one()
        for _ in range(f.q - 1):
            acc = acc * x
        assert acc == f.one()


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_parse_format_round_trip(p, m):
    f = field_make(p, m)
    for x in f.elements():
        assert fe_parse(fe_format(x), f) == x


def test_gf4_tokens():
    f = field_make(2, 2)
    assert fe_parse("a^2", f).coeffs == (1, 1)
    assert fe_parse("0", f) == f.zero()
    assert f.tokenize("a^2aa01") == [3, 2, 2, 0, 1]


def test_gf4_greedy_tokenizer_prefers_a2():
    f = field_make(2, 2)
    # "a^2" must not split into "a" followed by junk
    assert f.tokenize("a^2") == [3]
    with pytest.raises(ValueError):
        f.tokenize("b")


def test_parse_rejects_out_of_alphabet():
    with pytest.raises(ValueError):
        fe_parse("4", field_make(3))
    with pytest.raises(ValueError):
        fe_parse("x", field_make(5))


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
