import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mirrorqm.exact import ExactScalar, magnitude, scalar, sqrt

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(ExactScalar.gaussian, fractions, fractions)
radicands = st.sampled_from([1, 2, 3, 5, 6, 8, 12])
elements = st.builds(lambda g, n: g * ExactScalar.sqrt(n), gaussians, radicands)


def test_sqrt_two_squares_to_two():
    r = ExactScalar.sqrt(2)
    assert r * r == 2
    assert r != ExactScalar.gaussian(Fraction(14142, 10000))


def test_sqrt_extracts_square_factor():
    assert ExactScalar.sqrt(8) == 2 * ExactScalar.sqrt(2)
    assert ExactScalar.sqrt(Fraction(1, 2)) * 2 == ExactScalar.sqrt(2)
    assert ExactScalar.sqrt(9) == 3


def test_sqrt_negative_rejected():
    with pytest.raises(ValueError):
        ExactScalar.sqrt(-1)


def test_conjugate_flips_imaginary_parts():
    z = ExactScalar.gaussian(2, 3) * ExactScalar.sqrt(3)
    assert complex(z.conjugate()) == pytest.approx(complex(z).conjugate())


def test_division_by_gaussian():
    z = ExactScalar.gaussian(1, 1)
    assert z / ExactScalar.gaussian(0, 1) == ExactScalar.gaussian(1, -1)
    with pytest.raises(ZeroDivisionError):
        z / 0


def test_mode_helpers():
    assert isinstance(scalar(1, True), ExactScalar)
    assert scalar(1, False) == 1 + 0j
    assert complex(sqrt(2, True)) == pytest.approx(math.sqrt(2))
    assert sqrt(2, False) == pytest.approx(math.sqrt(2))
    assert magnitude(ExactScalar.gaussian(3, 4)) == pytest.approx(5.0)


def test_zero_is_falsy_and_hash_stable():
    assert not ExactScalar()
    assert hash(ExactScalar.gaussian(1, 2)) == hash(ExactScalar.gaussian(Fraction(2, 2), 2))


@given(elements, elements, elements)
def test_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(elements, elements)
def test_float_image_is_a_homomorphism(a, b):
    assert complex(a * b) == pytest.approx(complex(a) * complex(b), abs=1e-9)
    assert complex(a + b) == pytest.approx(complex(a) + complex(b), abs=1e-9)
