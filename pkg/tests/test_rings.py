from fractions import Fraction

import pytest

from xmod2.errors import BadShape, ParseError
from xmod2.rings import PrimeField, QQ, nullspace, ring_from_spec, solve_in_span


def test_rational_parse_lowest_terms():
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.parse("6/8") == Fraction(3, 4)
    assert QQ.parse("-2") == Fraction(-2)
    v = QQ.parse("-4/6")
    assert v.denominator > 0 and v == Fraction(-2, 3)
    with pytest.raises(ParseError):
        QQ.parse("1/0")


def test_rational_ops_exact():
    a = QQ.parse("1/3")
    assert QQ.add(a, a) == Fraction(2, 3)
    assert QQ.mul(a, QQ.inv(a)) == QQ.one
    assert QQ.is_zero(QQ.sub(a, a))


def test_prime_field_canonical_representatives():
    F5 = PrimeField(5)
    assert F5.parse("7") == 2
    assert F5.parse("2 mod 5") == 2
    assert F5.parse("-1") == 4
    assert F5.coerce(Fraction(1, 2)) == 3  # 1/2 = 3 mod 5
    assert F5.mul(3, 2) == 1
    assert F5.inv(2) == 3


def test_prime_field_rejects_wrong_modulus():
    F5 = PrimeField(5)
    with pytest.raises(ParseError):
        F5.parse("2 mod 7")
    with pytest.raises(BadShape):
        PrimeField(4)
    with pytest.raises(BadShape):
        PrimeField(2**31 + 11)


def test_ring_spec_round_trip():
    assert ring_from_spec("Q") == QQ
    assert ring_from_spec({"prime": 5}) == PrimeField(5)
    with pytest.raises(ParseError):
        ring_from_spec({"modulus": 5})


def test_nullspace_known_kernel():
    # x + y = 0 over Q: kernel is spanned by (-1, 1, 0) and (0, 0, 1)
    basis = nullspace([[QQ.one, QQ.one, QQ.zero]], 3, QQ)
    assert len(basis) == 2
    for vec in basis:
        assert QQ.is_zero(QQ.add(vec[0], vec[1]))


def test_nullspace_trivial():
    F5 = PrimeField(5)
    assert nullspace([[1, 0], [0, 1]], 2, F5) == []
    assert len(nullspace([], 2, F5)) == 0 or nullspace([], 2, F5)  # no rows: full kernel
    assert len(nullspace([[0, 0]], 2, F5)) == 2


def test_solve_in_span():
    v1 = [QQ.one, QQ.zero]
    v2 = [QQ.one, QQ.one]
    coeffs = solve_in_span([v1, v2], [QQ.parse("3"), QQ.parse("2")], QQ)
    assert coeffs == [Fraction(1), Fraction(2)]
    assert solve_in_span([v1], [QQ.zero, QQ.one], QQ) is None
    assert solve_in_span([], [QQ.zero, QQ.zero], QQ) == []
    assert solve_in_span([], [QQ.one], QQ) is None
