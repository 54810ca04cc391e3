import math
from fractions import Fraction

import pytest

from ecctrees.errors import NoRootInBracket
from ecctrees.polynomial import IntPolynomial, largest_root, real_roots

X = IntPolynomial.x()


def test_arithmetic():
    p = (X - 1) * (X + 2)
    assert p.coeffs == (-2, 1, 1)
    assert (p - p).coeffs == ()
    assert (X ** 3).degree == 3
    assert p.derivative().coeffs == (1, 2)
    assert p(3) == 10
    assert IntPolynomial.from_descending(1, 0, -4) == X * X - 4


def test_exact_sign():
    p = X * X - 2
    assert p.sign_at(math.sqrt(2)) in (-1, 1)
    assert p.sign_at(Fraction(3, 2)) == 1
    assert p.sign_at(1.0) == -1
    assert (3 * X - 1).sign_at(Fraction(1, 3)) == 0


def test_formatting():
    p = IntPolynomial.from_descending(1, 0, -161, -108, 3669)
    assert str(p) == "x^4 - 161x^2 - 108x + 3669"
    q = X * X * IntPolynomial.from_descending(1, 0, -107, 0, 1681)
    assert q.factored_str() == "x^2(x^4 - 107x^2 + 1681)"
    assert str(-X) == "-x"
    assert X.factored_str() == "x"


def test_x_power():
    q = X ** 3 * (X - 5)
    assert q.strip_x_power() == (3, X - 5)


def test_largest_root_examples():
    assert largest_root(X * X - 4) == pytest.approx(2, abs=1e-14)
    p = IntPolynomial.from_descending(1, 0, -107, 0, 1681)
    assert largest_root(p) == pytest.approx(math.sqrt((107 + math.sqrt(4725)) / 2), abs=1e-12)
    p = IntPolynomial.from_descending(1, 0, -161, -108, 3669)
    assert 11 < largest_root(p) < 13


def test_real_roots_with_repeated_and_close_roots():
    p = (X - 1) ** 2 * (X - 2) * (X + 3)
    assert real_roots(p) == pytest.approx([-3, 1, 2], abs=1e-9)
    p = (2 * X - 1) * (X - 1)
    assert real_roots(p) == pytest.approx([0.5, 1.0])


def test_no_root():
    with pytest.raises(NoRootInBracket):
        largest_root(X * X + 1)
    with pytest.raises(NoRootInBracket):
        largest_root(IntPolynomial((3,)))
