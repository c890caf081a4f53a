from fractions import Fraction

import pytest
from hypothesis import given

from strategies import rationals
from unitary_pencils.gaussian import (
    GaussianRational,
    exact_tuple,
    format_exact,
    parse_number,
    parse_vector,
    rational_from_float,
    to_exact,
)

F = Fraction


@pytest.mark.parametrize(
    "token, expected",
    [
        ("0.3", (F(3, 10), 0)),
        ("-1/4", (F(-1, 4), 0)),
        ("1+2i", (1, 2)),
        ("0.5-0.25i", (F(1, 2), F(-1, 4))),
        ("i", (0, 1)),
        ("-i", (0, -1)),
        ("3/2i", (0, F(3, 2))),
        ("1e-2", (F(1, 100), 0)),
        (" 2 + i ", (2, 1)),
    ],
)
def test_parse_number(token, expected):
    assert parse_number(token) == GaussianRational(*expected)


@pytest.mark.parametrize("bad", ["", "1+", "abc", "1++2i", "2i3"])
def test_parse_number_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_number(bad)


def test_parse_vector_and_format():
    v = parse_vector("0.3,1/2-i")
    assert v == (GaussianRational(F(3, 10)), GaussianRational(F(1, 2), -1))
    assert [format_exact(z) for z in v] == ["3/10", "1/2-1i"]
    assert format_exact(F(2, 4)) == "1/2"


@given(rationals(), rationals(), rationals(), rationals())
def test_field_axioms(a, b, c, d):
    z, w = GaussianRational(a, b), GaussianRational(c, d)
    assert z * w == w * z
    assert (z + w) - w == z
    assert (z * w).abs2() == z.abs2() * w.abs2()
    assert z * z.conjugate() == z.abs2()
    if w.abs2():
        assert (z / w) * w == z
    assert complex(z) == pytest.approx(complex(float(a), float(b)))


def test_powers_and_hash():
    z = GaussianRational(1, 1)
    assert z**4 == -4
    assert z**-2 == GaussianRational(0, F(-1, 2))
    assert hash(GaussianRational(F(1, 2))) == hash(F(1, 2))


def test_exactness_helpers():
    assert to_exact(3) == GaussianRational(3)
    assert to_exact(0.5) is None
    assert exact_tuple([1, F(1, 3)]) == (GaussianRational(1), GaussianRational(F(1, 3)))
    assert exact_tuple([1, 0.1]) is None
    assert rational_from_float(0.1 + 0.5j) == GaussianRational(F(0.1), F(1, 2))
    with pytest.raises(TypeError):
        to_exact(True)
