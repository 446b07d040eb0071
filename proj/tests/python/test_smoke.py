from fractions import Fraction

import pytest

import gosum


def test_definite_sum():
    assert gosum.definite_sum("(k-1)/fact(k)", 5) == Fraction(-1, 120)
    assert gosum.brute_sum("(k-1)/fact(k)", 5) == Fraction(-1, 120)
    assert gosum.definite_sum("0", 4) == 0


def test_antidifference():
    cert = gosum.antidifference("(k-1)/fact(k)")
    assert cert["x"] == [Fraction(-1)]
    assert cert["normal_form"]["c"] == [Fraction(-1), Fraction(1)]
    assert gosum.antidifference("1/fact(k)") is None


def test_not_summable_raises():
    with pytest.raises(gosum.NotSummable):
        gosum.definite_sum("1/fact(k)", 3)


def test_parse_errors():
    assert gosum.parse_term("fact(k)*(k-1)") == "(k - 1)*fact(k)"
    with pytest.raises(gosum.TermError, match="^7:"):
        gosum.parse_term("1/fact(")
    with pytest.raises(ValueError):
        gosum.parse_term("2^k")


def test_corrections():
    assert gosum.corrections("f", 4, a=1, z=2) == [1, 2, 6, 22, 94]
    assert gosum.corrections("f", 2, a=Fraction(1, 2))[2] == Fraction(13, 4)
    assert gosum.corrections("g", 3, a=1, z="-1") == [1, -2, 5, -15]
    assert gosum.corrections("bell", 6, route="basis") == [1, 1, 2, 5, 15, 52, 203]
    with pytest.raises(ValueError):
        gosum.corrections("f", 3, a=0)
    with pytest.raises(TypeError):
        gosum.corrections("f", 3, a=0.5)


def test_tables():
    assert gosum.table("B", 5) == [[1], [1, 1], [3, 1, 1], [9, 4, 1, 1], [31, 14, 5, 1, 1]]
    assert gosum.table("gould", 5) == [1, 1, 3, 9, 31]
    assert gosum.table("A", 1) == [[1]]


def test_verify():
    results = gosum.verify()
    assert len(results) >= 20
    assert all(r["status"] == "PASS" for r in results)
