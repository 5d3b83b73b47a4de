from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from antiholo.arith import (ArithmeticDomainError, Mat, QComplex, QReal, div, format_rat,
                            parse_rat, qreal_sign)

rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)
radicands = st.sampled_from([2, 3, 7, 11, 19])


def to_sympy(x):
    if isinstance(x, QReal):
        return sympy.Rational(x.a) + sympy.Rational(x.b) * sympy.sqrt(x.p)
    if isinstance(x, QComplex):
        return to_sympy(x.re) + sympy.I * to_sympy(x.im)
    return sympy.Rational(x)


# ------------------------------------------------------------ signs --

def test_sign_zero():
    assert qreal_sign(QReal(0, 0, 2)) == 0


def test_sign_rational():
    assert qreal_sign(QReal(1, 0, 2)) == 1


def test_sign_mixed():
    # 1 < sqrt 2
    assert qreal_sign(QReal(1, -1, 2)) == -1


@given(rats, rats, rats, rats, radicands)
def test_sign_agrees_with_decimal(a, b, c, e, p):
    x, y = QReal(a, b, p), QReal(c, e, p)
    s = qreal_sign(x - y)
    getcontext().prec = 60
    dx, dy = x.to_decimal(50), y.to_decimal(50)
    if s > 0:
        assert dx > dy
    elif s < 0:
        assert dx < dy
    else:
        assert x == y


@given(rats, rats, radicands)
def test_sign_matches_sympy(a, b, p):
    x = QReal(a, b, p)
    assert qreal_sign(x) == sympy.sign(to_sympy(x))


# ------------------------------------------------------------ fields --

def test_norm_example():
    assert QReal(1, 1, 2) * QReal(1, -1, 2) == -1


def test_complex_identity():
    z = QComplex(QReal(1, 2, 3), Fraction(1, 2))
    assert QComplex(1, 0) * z == z


def test_conjugate_i():
    assert QComplex(0, 1).conjugate() == QComplex(0, -1)


@settings(max_examples=60)
@given(rats, rats, rats, rats, rats, rats, radicands)
def test_field_axioms(a, b, c, e, f, g, p):
    x, y, z = QReal(a, b, p), QReal(c, e, p), QReal(f, g, p)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x != 0:
        assert x * x.inverse() == 1


@settings(max_examples=25)
@given(rats, rats, rats, rats, radicands)
def test_complex_division_matches_sympy(a, b, c, e, p):
    x = QComplex(QReal(a, b, p), c)
    y = QComplex(e, QReal(1, b, p))
    q = x / y
    assert sympy.simplify(to_sympy(q) - to_sympy(x) / to_sympy(y)) == 0


def test_division_by_zero():
    with pytest.raises(ArithmeticDomainError):
        div(1, 0)
    with pytest.raises(ArithmeticDomainError):
        QReal(1, 1, 2) / QReal(0, 0, 2)


def test_mixed_radicands_rejected():
    with pytest.raises(ArithmeticDomainError):
        QReal(1, 1, 2) + QReal(1, 1, 3)


def test_degenerate_radicand():
    assert QReal(3, 0, 1) == 3
    with pytest.raises(ArithmeticDomainError):
        QReal(1, 1, 1)
    with pytest.raises(ArithmeticDomainError):
        QReal(1, 1, 4)


def test_rational_strings_roundtrip():
    for x in (0, 7, -3, Fraction(-2, 5), Fraction(9, 4)):
        assert parse_rat(format_rat(x)) == x
    assert format_rat(Fraction(6, 3)) == "2"


# ----------------------------------------------------------- matrices --

ints = st.integers(-4, 4)
mat4 = st.lists(st.lists(ints, min_size=4, max_size=4), min_size=4, max_size=4)


def test_identity_product():
    A = Mat([[1, 2, 0, 0], [3, 4, 0, 1], [0, 0, 1, 0], [5, 0, 0, 1]])
    assert A * Mat.identity(4) == A


def test_beta_det_for_d_minus_two():
    assert Mat([[0, 1], [-2, 0]]).det() == 2


@given(mat4, mat4)
def test_det_multiplicative(a, b):
    A, B = Mat(a), Mat(b)
    assert (A * B).det() == A.det() * B.det()


@given(mat4)
def test_det_matches_sympy(a):
    assert Mat(a).det() == sympy.Matrix(a).det()


def _unimodular(rng_rows):
    M = Mat.identity(4)
    for i, j, k in rng_rows:
        if i != j:
            E = [[int(r == c) for c in range(4)] for r in range(4)]
            E[i][j] = k
            M = M * Mat(E)
    return M


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3)), max_size=8))
def test_unimodular_inverse_is_integral(ops):
    M = _unimodular(ops)
    Mi = M.inv()
    assert Mi.is_integral()
    assert M * Mi == Mat.identity(4)
    assert Mi == Mat([[int(x) for x in r] for r in sympy.Matrix(M.tolist()).inv().tolist()])


def test_singular_inverse():
    with pytest.raises(ArithmeticDomainError):
        Mat([[1, 2], [2, 4]]).inv()


def test_qreal_decimal():
    assert QReal(0, 1, 2).to_decimal(30).quantize(Decimal("1e-20")) == Decimal(
        "1.41421356237309504880")
