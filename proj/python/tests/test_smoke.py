from fractions import Fraction

import pytest

import brieskorn

QUINTIC = {"mode": "polynomial", "n": 2, "f": "u1^5+u2^5", "deformation": ["u1", "u2"]}


def test_numbers_agree_on_corpus():
    corpus = [
        ("u1^3", 1, "polynomial"),
        ("u1 + u1^-1", 1, "laurent"),
        ("u1 + u2 + u1^-1*u2^-1", 2, "laurent"),
        ("u1^5 + u2^5", 2, "polynomial"),
    ]
    for f, n, mode in corpus:
        assert brieskorn.milnor_number(f, n, mode) == int(brieskorn.newton_number(f, n, mode))


def test_golden_report():
    report = brieskorn.analyze(QUINTIC)
    assert report["mu"] == 16
    binf = report["connection"]["Binf"]
    assert sorted(brieskorn.rational(binf[k][k]) for k in range(16))[0] == Fraction(2, 5)
    assert report["t_symmetry"]["ok"]
    assert report["connection"]["integrability"]["ok"]
    assert all(report["conditions"][c]["ok"] for c in ("ec", "ic", "gc"))


def test_spectrum_and_divide():
    circle = {"mode": "laurent", "n": 1, "f": "u1+u1^-1"}
    assert brieskorn.run("spectrum", circle)["spectrum"] == ["0", "1"]
    cubic = {"mode": "polynomial", "n": 1, "variables": ["u"], "parameters": ["x"], "f": "u^3", "deformation": ["u"]}
    div = brieskorn.run("divide", cubic, h="u^2")["division"]
    assert div["remainder"] == "-1/3*x"
    assert div["cofactors"] == ["1/3"]


def test_errors_map_to_exceptions():
    with pytest.raises(brieskorn.HypothesisError):
        brieskorn.run("milnor", {"mode": "polynomial", "n": 2, "f": "u1^5 + u1*u2^3"})
    with pytest.raises(brieskorn.UsageError):
        brieskorn.run("milnor", {"mode": "polynomial", "n": 1})
    with pytest.raises(brieskorn.ParseError):
        brieskorn.normalize("u1 + v2", 2)
    with pytest.raises(brieskorn.BudgetExceeded):
        brieskorn.run("milnor", dict(QUINTIC, flags={"budget": 1}))


def test_normalize():
    assert brieskorn.normalize("2u1u1 - u1^2", 1) == "u1^2"
